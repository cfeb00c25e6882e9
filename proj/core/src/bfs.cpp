#include "abelgrowth/bfs.hpp"

#include "abelgrowth/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace abelgrowth {

namespace {

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept { return hash_element(g); }
};

struct RunOutput {
    std::vector<Count> sigma;                          // sigma[0..completed_radius]
    std::vector<std::pair<GroupElement, int>> ball;    // filled when keep_ball
    std::vector<std::optional<int>> target_dist;       // one slot per requested target
    bool exhausted = false;                            // ball stopped growing
    int completed_radius = 0;
};

struct SearchRequest {
    int max_radius = 0;
    bool keep_ball = false;
    std::span<const GroupElement> targets;
    bool stop_when_targets_found = false;
    ResourceBudget budget{};
};

std::vector<GroupElement> dedupe(const GroupSpec& spec, std::span<const GroupElement> elements) {
    std::unordered_set<GroupElement, ElementHash> seen;
    std::vector<GroupElement> out;
    out.reserve(elements.size());
    for (const GroupElement& g : elements) {
        spec.require_conforms(g);
        if (seen.insert(g).second) out.push_back(g);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense path. Every element reachable in at most R steps has |vec[j]| bounded
// by R * max_j(|generator vec[j]|), so the whole search lives in a fixed box
// and can be indexed by offset into a bitmap: no hashing, no per-element
// allocation. Layers are expanded strictly one radius at a time, which keeps
// all intermediate coordinates inside the box by construction.

struct DenseNode {
    std::int64_t base; // packed lattice offset within the box
    std::int32_t tor;
};

class DenseBox {
public:
    // Returns false when the box cannot be set up within (a fraction of) the
    // memory budget, in which case the caller falls back to hashing.
    bool init(const GroupSpec& spec, std::span<const GroupElement> gens, int radius,
              std::uint64_t mem_cap) {
        const int d = spec.rank();
        half_.assign(d, 0);
        for (const GroupElement& g : gens) {
            for (int j = 0; j < d; ++j) {
                const std::int64_t a = std::abs(g.vec[j]);
                half_[j] = std::max(half_[j], a);
            }
        }
        using Wide = unsigned __int128;
        Wide cells = 1;
        stride_.assign(d, 0);
        for (int j = 0; j < d; ++j) {
            const Wide h = static_cast<Wide>(half_[j]) * static_cast<Wide>(radius);
            if (h > (Wide{1} << 61)) return false;
            half_[j] = static_cast<std::int64_t>(h);
            cells *= 2 * h + 1;
            if (cells > (Wide{1} << 61)) return false;
        }
        // strides: stride[d-1] = 1, stride[j] = stride[j+1] * width[j+1]
        std::int64_t s = 1;
        for (int j = d - 1; j >= 0; --j) {
            stride_[j] = s;
            s = static_cast<std::int64_t>(s * (2 * half_[j] + 1));
        }
        vec_cells_ = s;
        const Wide total = static_cast<Wide>(vec_cells_) * static_cast<Wide>(spec.torsion().order());
        if (total > (Wide{1} << 61)) return false;
        total_ = static_cast<std::int64_t>(total);
        const std::uint64_t bitmap_bytes = (static_cast<std::uint64_t>(total_) + 7) / 8;
        if (bitmap_bytes > mem_cap - mem_cap / 4) return false;
        return true;
    }

    std::int64_t center() const {
        std::int64_t b = 0;
        for (std::size_t j = 0; j < half_.size(); ++j) b += half_[j] * stride_[j];
        return b;
    }

    // Packed lattice offset of a vector, or nullopt when outside the box.
    std::optional<std::int64_t> pack(const std::vector<std::int64_t>& v) const {
        std::int64_t b = 0;
        for (std::size_t j = 0; j < half_.size(); ++j) {
            if (v[j] < -half_[j] || v[j] > half_[j]) return std::nullopt;
            b += (v[j] + half_[j]) * stride_[j];
        }
        return b;
    }

    std::vector<std::int64_t> unpack(std::int64_t base) const {
        std::vector<std::int64_t> v(half_.size());
        for (std::size_t j = 0; j < half_.size(); ++j) {
            const std::int64_t width = 2 * half_[j] + 1;
            v[j] = (base / stride_[j]) % width - half_[j];
        }
        return v;
    }

    std::int64_t delta_of(const GroupElement& g) const {
        std::int64_t delta = 0;
        for (std::size_t j = 0; j < half_.size(); ++j) delta += g.vec[j] * stride_[j];
        return delta;
    }

    std::int64_t total() const { return total_; }
    std::int64_t max_half() const {
        std::int64_t m = 0;
        for (std::int64_t h : half_) m = std::max(m, h);
        return m;
    }

private:
    std::vector<std::int64_t> half_;
    std::vector<std::int64_t> stride_;
    std::int64_t vec_cells_ = 1;
    std::int64_t total_ = 1;
};

std::optional<RunOutput> dense_run(const GroupSpec& spec, std::span<const GroupElement> gens,
                                   const SearchRequest& req) {
    const int n_tor = spec.torsion().order();
    DenseBox box;
    if (!box.init(spec, gens, req.max_radius, req.budget.mem_cap_bytes)) return std::nullopt;
    if (box.max_half() > req.budget.coord_limit()) {
        throw ResourceError("search box exceeds the coordinate budget of " +
                            std::to_string(req.budget.coord_bits) + " bits", 0);
    }

    const auto table = spec.torsion().table();
    std::vector<std::int64_t> delta(gens.size());
    std::vector<std::int32_t> gtor(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
        delta[s] = box.delta_of(gens[s]);
        gtor[s] = gens[s].tor;
    }

    const std::uint64_t total = static_cast<std::uint64_t>(box.total());
    std::vector<std::uint64_t> seen((total + 63) / 64, 0);
    auto test_and_set = [&seen](std::uint64_t idx) {
        std::uint64_t& word = seen[idx >> 6];
        const std::uint64_t bit = 1ULL << (idx & 63);
        if (word & bit) return false;
        word |= bit;
        return true;
    };

    RunOutput out;
    out.target_dist.assign(req.targets.size(), std::nullopt);

    std::unordered_map<std::uint64_t, int> found; // packed idx -> distance
    std::unordered_set<std::uint64_t> pending;
    for (const GroupElement& t : req.targets) {
        spec.require_conforms(t);
        if (auto b = box.pack(t.vec)) {
            pending.insert(static_cast<std::uint64_t>(*b) * n_tor + t.tor);
        }
    }

    const std::int64_t center = box.center();
    std::vector<DenseNode> cur{{center, 0}}, nxt;
    const std::uint64_t start_idx = static_cast<std::uint64_t>(center) * n_tor;
    test_and_set(start_idx);
    if (pending.erase(start_idx)) found.emplace(start_idx, 0);

    std::vector<std::vector<DenseNode>> layers;
    if (req.keep_ball) layers.push_back(cur);

    out.sigma.push_back(1);
    std::uint64_t mem_used = seen.size() * 8;

    for (int r = 1; r <= req.max_radius; ++r) {
        if (req.stop_when_targets_found && pending.empty()) break;
        nxt.clear();
        for (const DenseNode& node : cur) {
            const std::int32_t f = node.tor;
            const auto& row = table[f];
            for (std::size_t s = 0; s < gens.size(); ++s) {
                const std::int64_t nb = node.base + delta[s];
                const std::int32_t nt = row[gtor[s]];
                const std::uint64_t idx = static_cast<std::uint64_t>(nb) * n_tor + nt;
                if (test_and_set(idx)) {
                    nxt.push_back({nb, nt});
                    if (!pending.empty() && pending.erase(idx)) found.emplace(idx, r);
                }
            }
        }
        out.sigma.push_back(static_cast<Count>(nxt.size()));
        out.completed_radius = r;

        mem_used = seen.size() * 8 + (cur.capacity() + nxt.capacity()) * sizeof(DenseNode);
        if (req.keep_ball) {
            layers.push_back(nxt);
            for (const auto& layer : layers) mem_used += layer.size() * sizeof(DenseNode);
        }
        if (mem_used > req.budget.mem_cap_bytes) {
            throw ResourceError("memory budget of " + std::to_string(req.budget.mem_cap_bytes) +
                                    " bytes exceeded at radius " + std::to_string(r),
                                r);
        }
        if (nxt.empty()) {
            out.exhausted = true;
            break;
        }
        std::swap(cur, nxt);
    }

    if (req.keep_ball) {
        std::uint64_t ball_elems = 0;
        for (const auto& layer : layers) ball_elems += layer.size();
        const std::uint64_t per = 48 + 8 * static_cast<std::uint64_t>(spec.rank());
        if (mem_used + ball_elems * per > req.budget.mem_cap_bytes) {
            throw ResourceError("ball snapshot exceeds the memory budget", out.completed_radius);
        }
        out.ball.reserve(ball_elems);
        for (int r = 0; r < static_cast<int>(layers.size()); ++r) {
            for (const DenseNode& node : layers[r]) {
                out.ball.emplace_back(GroupElement{box.unpack(node.base), node.tor}, r);
            }
        }
    }

    for (std::size_t i = 0; i < req.targets.size(); ++i) {
        if (auto b = box.pack(req.targets[i].vec)) {
            const std::uint64_t idx = static_cast<std::uint64_t>(*b) * n_tor + req.targets[i].tor;
            if (auto it = found.find(idx); it != found.end()) out.target_dist[i] = it->second;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hash path, for searches whose bounding box does not fit the budget (large
// generator entries, high radius caps). Same layer discipline, elements kept
// explicitly.

RunOutput hash_run(const GroupSpec& spec, std::span<const GroupElement> gens,
                   const SearchRequest& req) {
    const std::int64_t coord_limit = req.budget.coord_limit();
    const int d = spec.rank();

    std::unordered_set<GroupElement, ElementHash> visited;
    std::vector<GroupElement> cur, nxt;

    RunOutput out;
    out.target_dist.assign(req.targets.size(), std::nullopt);
    std::unordered_map<GroupElement, int, ElementHash> found;
    std::unordered_set<GroupElement, ElementHash> pending;
    for (const GroupElement& t : req.targets) {
        spec.require_conforms(t);
        pending.insert(t);
    }

    const GroupElement identity = spec.identity();
    visited.insert(identity);
    cur.push_back(identity);
    if (pending.erase(identity)) found.emplace(identity, 0);
    out.sigma.push_back(1);
    if (req.keep_ball) out.ball.emplace_back(identity, 0);

    // Rough per-element footprint: the element itself, its heap vector, and
    // the hash-set node around it.
    const std::uint64_t per_elem =
        sizeof(GroupElement) + 8 * static_cast<std::uint64_t>(d) + 48 + (req.keep_ball ? 40 : 0);

    GroupElement e;
    e.vec.resize(d);
    for (int r = 1; r <= req.max_radius; ++r) {
        if (req.stop_when_targets_found && pending.empty()) break;
        nxt.clear();
        for (const GroupElement& g : cur) {
            for (const GroupElement& s : gens) {
                for (int j = 0; j < d; ++j) {
                    if (__builtin_add_overflow(g.vec[j], s.vec[j], &e.vec[j]) ||
                        e.vec[j] > coord_limit || e.vec[j] < -coord_limit) {
                        throw ResourceError("coordinate exceeded " +
                                                std::to_string(req.budget.coord_bits) +
                                                " bits at radius " + std::to_string(r),
                                            r - 1);
                    }
                }
                e.tor = spec.torsion().mul(g.tor, s.tor);
                if (visited.insert(e).second) {
                    nxt.push_back(e);
                    if (!pending.empty() && pending.erase(e)) found.emplace(e, r);
                }
            }
        }
        out.sigma.push_back(static_cast<Count>(nxt.size()));
        out.completed_radius = r;
        if (req.keep_ball) {
            for (const GroupElement& g : nxt) out.ball.emplace_back(g, r);
        }
        if (visited.size() * per_elem > req.budget.mem_cap_bytes) {
            throw ResourceError("memory budget of " + std::to_string(req.budget.mem_cap_bytes) +
                                    " bytes exceeded at radius " + std::to_string(r),
                                r);
        }
        if (nxt.empty()) {
            out.exhausted = true;
            break;
        }
        std::swap(cur, nxt);
    }

    for (std::size_t i = 0; i < req.targets.size(); ++i) {
        if (auto it = found.find(req.targets[i]); it != found.end()) out.target_dist[i] = it->second;
    }
    return out;
}

RunOutput run_search(const GroupSpec& spec, std::span<const GroupElement> elements,
                     const SearchRequest& req) {
    if (req.max_radius < 0) throw ValidationError("radius must be nonnegative");
    const std::vector<GroupElement> gens = dedupe(spec, elements);
    if (auto dense = dense_run(spec, gens, req)) return std::move(*dense);
    return hash_run(spec, gens, req);
}

} // namespace

BfsResult bfs_growth(const GeneratingSet& set, const BfsOptions& options) {
    return bfs_growth_elements(set.group(), set.elements(), options);
}

BfsResult bfs_growth_elements(const GroupSpec& spec, std::span<const GroupElement> elements,
                              const BfsOptions& options) {
    if (elements.empty()) throw ValidationError("empty element list");
    SearchRequest req;
    req.max_radius = options.max_radius;
    req.keep_ball = options.keep_ball;
    req.budget = options.budget;
    RunOutput out = run_search(spec, elements, req);

    // A ball that stops growing (possible only with a finite reachable set)
    // legitimately has empty spheres from there on.
    std::vector<Count> sigma = std::move(out.sigma);
    sigma.resize(static_cast<std::size_t>(options.max_radius) + 1, Count(0));

    BfsResult result{GrowthSeries(std::move(sigma), Provenance::Bfs), std::nullopt};
    if (options.keep_ball) {
        result.ball.emplace(options.max_radius, std::move(out.ball));
    }
    return result;
}

std::vector<std::optional<int>> word_distances(const GroupSpec& spec,
                                               std::span<const GroupElement> elements,
                                               std::span<const GroupElement> targets,
                                               int radius_cap,
                                               const ResourceBudget& budget) {
    if (elements.empty()) throw ValidationError("empty element list");
    SearchRequest req;
    req.max_radius = radius_cap;
    req.targets = targets;
    req.stop_when_targets_found = true;
    req.budget = budget;
    return run_search(spec, elements, req).target_dist;
}

std::optional<int> word_distance(const GroupSpec& spec, const GeneratingSet& set,
                                 const GroupElement& g, int radius_cap,
                                 const ResourceBudget& budget) {
    const GroupElement targets[] = {g};
    return word_distances(spec, set.elements(), targets, radius_cap, budget)[0];
}

TorsionDiameter torsion_diameter(const GeneratingSet& set, int radius_cap,
                                 const ResourceBudget& budget) {
    const GroupSpec& spec = set.group();
    const int n = spec.torsion().order();
    std::vector<GroupElement> targets(n);
    for (int f = 0; f < n; ++f) targets[f] = GroupElement{std::vector<std::int64_t>(spec.rank(), 0), f};

    auto attempt = [&](int cap) {
        return word_distances(spec, set.elements(), targets, cap, budget);
    };

    std::vector<std::optional<int>> dist;
    if (radius_cap > 0) {
        dist = attempt(radius_cap);
    } else {
        for (int cap = 2; cap <= (1 << 14); cap *= 2) {
            dist = attempt(cap);
            if (std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); })) break;
        }
    }

    TorsionDiameter td;
    td.distances.resize(n);
    for (int f = 0; f < n; ++f) {
        if (!dist[f]) {
            throw GenerationError("torsion element " + std::to_string(f) +
                                  " not reachable within the word-length cap");
        }
        td.distances[f] = *dist[f];
        td.full = std::max(td.full, *dist[f]);
        if (spec.torsion().mul(f, f) == 0) td.involutions = std::max(td.involutions, *dist[f]);
    }
    return td;
}

int change_constant(const GeneratingSet& s, const GeneratingSet& t, const ResourceBudget& budget) {
    if (!s.group().same_group(t.group())) {
        throw ValidationError("change_constant needs two sets in the same group");
    }
    auto longest = [&](const GeneratingSet& words_over, const GeneratingSet& reach) {
        for (int cap = 2; cap <= (1 << 14); cap *= 2) {
            auto dist = word_distances(words_over.group(), words_over.elements(), reach.elements(),
                                       cap, budget);
            int worst = 0;
            bool all = true;
            for (const auto& d : dist) {
                if (!d) {
                    all = false;
                    break;
                }
                worst = std::max(worst, *d);
            }
            if (all) return worst;
        }
        throw GenerationError("no change-of-generators bound found within the word-length cap");
    };
    return std::max(longest(s, t), longest(t, s));
}

} // namespace abelgrowth
