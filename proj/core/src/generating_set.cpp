#include "abelgrowth/generating_set.hpp"

#include "abelgrowth/bfs.hpp"
#include "abelgrowth/errors.hpp"
#include "exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace abelgrowth {

std::string_view to_string(SetKind kind) noexcept {
    return kind == SetKind::Symmetric ? "symmetric" : "monoid";
}

namespace {

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept { return hash_element(g); }
};

std::vector<GroupElement> dedupe_conforming(const GroupSpec& spec,
                                            std::span<const GroupElement> elements) {
    std::unordered_set<GroupElement, ElementHash> seen;
    std::vector<GroupElement> out;
    out.reserve(elements.size());
    for (const GroupElement& g : elements) {
        spec.require_conforms(g);
        if (seen.insert(g).second) out.push_back(g);
    }
    return out;
}

int torsion_power(const TorsionGroup& tor, int f, const Count& exponent) {
    const int ord = tor.element_order(f);
    Count e = exponent % ord;
    if (e < 0) e += ord;
    int steps = static_cast<int>(e);
    int x = 0;
    for (int i = 0; i < steps; ++i) x = tor.mul(x, f);
    return x;
}

// Subgroup of F generated by the seeds and closed under conjugation by the
// given conjugators (and their inverses). Worklist closure; every pair of
// members gets multiplied once in each order.
std::vector<char> normal_subgroup_closure(const TorsionGroup& tor, std::vector<int> seeds,
                                          const std::vector<int>& conjugators) {
    const int n = tor.order();
    std::vector<char> in_t(n, 0);
    std::vector<int> members;
    std::vector<int> work;
    auto add = [&](int x) {
        if (!in_t[x]) {
            in_t[x] = 1;
            work.push_back(x);
        }
    };
    add(0);
    for (int s : seeds) add(s);
    while (!work.empty()) {
        const int x = work.back();
        work.pop_back();
        members.push_back(x); // before the product loop, so x*x is covered
        add(tor.inv(x));
        for (std::size_t i = 0; i < members.size(); ++i) {
            add(tor.mul(x, members[i]));
            add(tor.mul(members[i], x));
        }
        for (int c : conjugators) {
            add(tor.mul(tor.mul(c, x), tor.inv(c)));
            add(tor.mul(tor.mul(tor.inv(c), x), c));
        }
    }
    return in_t;
}

} // namespace

GenerationCheck check_generates(const GroupSpec& spec, std::span<const GroupElement> elements,
                                int certificate_cap, const ResourceBudget& budget) {
    GenerationCheck check;
    const std::vector<GroupElement> gens = dedupe_conforming(spec, elements);
    if (gens.empty()) throw ValidationError("empty generating set");

    const int d = spec.rank();
    const int m = static_cast<int>(gens.size());
    const TorsionGroup& tor = spec.torsion();

    // Lattice side: Smith normal form of the d x m matrix of projections.
    detail::Mat v(d, std::vector<Count>(m));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < m; ++j) v[i][j] = gens[j].vec[i];
    }
    detail::SmithResult smith = detail::smith_normal_form(std::move(v));
    check.lattice_invariants = smith.invariant_factors;

    // A pure torsion group projects through a rowless matrix, which cannot
    // carry its column count, so the computed kernel basis comes back empty.
    // The kernel of the zero map is the whole exponent lattice.
    if (d == 0) {
        smith.kernel_basis.assign(static_cast<std::size_t>(m), std::vector<Count>(m, 0));
        for (int j = 0; j < m; ++j) smith.kernel_basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
    }

    if (smith.rank < d) {
        check.verdict = GenerationCheck::Verdict::ProperSubgroup;
        std::ostringstream os;
        os << "lattice projections span rank " << smith.rank << " < " << d;
        check.detail = os.str();
        return check;
    }
    for (const Count& f : smith.invariant_factors) {
        if (f != 1) {
            check.verdict = GenerationCheck::Verdict::ProperSubgroup;
            std::ostringstream os;
            os << "lattice projections span a proper sublattice, invariant factors";
            for (const Count& g : smith.invariant_factors) os << ' ' << g;
            check.detail = os.str();
            return check;
        }
    }

    // Torsion side: the purely torsion elements of the generated subgroup are
    // exactly the normal closure (under conjugation by the generators'
    // torsion parts) of the commutators together with the torsion parts of
    // words whose lattice exponent vector lies in the kernel of the
    // projection matrix. A kernel basis suffices because the quotient by the
    // commutator closure is abelian.
    std::vector<int> seeds;
    std::vector<int> conjugators;
    for (const GroupElement& g : gens) conjugators.push_back(g.tor);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const int a = gens[i].tor, b = gens[j].tor;
            seeds.push_back(tor.mul(tor.mul(a, b), tor.mul(tor.inv(a), tor.inv(b))));
        }
    }
    for (const auto& k : smith.kernel_basis) {
        int prod = 0;
        for (int j = 0; j < m; ++j) prod = tor.mul(prod, torsion_power(tor, gens[j].tor, k[j]));
        seeds.push_back(prod);
    }
    const std::vector<char> reachable = normal_subgroup_closure(tor, std::move(seeds), conjugators);
    const int reached = static_cast<int>(std::count(reachable.begin(), reachable.end(), 1));
    if (reached != tor.order()) {
        check.verdict = GenerationCheck::Verdict::ProperSubgroup;
        std::ostringstream os;
        os << "reachable torsion subgroup has order " << reached << " < " << tor.order();
        check.detail = os.str();
        return check;
    }

    if (certificate_cap <= 0) {
        check.verdict = GenerationCheck::Verdict::Generates;
        check.detail = "subgroup checks passed";
        return check;
    }

    // Monoid side: find a word over the set equal to inv(s) for each s.
    std::vector<GroupElement> targets;
    targets.reserve(gens.size());
    for (const GroupElement& g : gens) targets.push_back(spec.inv(g));
    std::vector<std::optional<int>> dist;
    try {
        dist = word_distances(spec, gens, targets, certificate_cap, budget);
    } catch (const ResourceError& e) {
        check.verdict = GenerationCheck::Verdict::Inconclusive;
        check.detail = std::string("certificate search ran out of budget: ") + e.what();
        return check;
    }
    std::vector<int> missing;
    check.certificate_lengths.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (dist[i]) {
            check.certificate_lengths[i] = *dist[i];
        } else {
            missing.push_back(static_cast<int>(i));
        }
    }
    if (!missing.empty()) {
        check.certificate_lengths.clear();
        check.verdict = GenerationCheck::Verdict::Inconclusive;
        std::ostringstream os;
        os << "no inverse word of length <= " << certificate_cap << " for member index";
        for (int i : missing) os << ' ' << i;
        check.detail = os.str();
        return check;
    }
    check.verdict = GenerationCheck::Verdict::Generates;
    check.detail = "subgroup checks passed, inverse certificates found";
    return check;
}

GeneratingSet GeneratingSet::create(const GroupSpec& spec, std::vector<GroupElement> elements,
                                    SetKind kind) {
    return create(spec, std::move(elements), kind, Options{});
}

GeneratingSet GeneratingSet::create(const GroupSpec& spec, std::vector<GroupElement> elements,
                                    SetKind kind, const Options& options) {
    std::vector<GroupElement> gens = dedupe_conforming(spec, elements);
    if (gens.empty()) throw ValidationError("empty generating set");

    GeneratingSet set(spec, std::move(gens), kind);
    if (kind == SetKind::Symmetric && !set.closed_under_inverse()) {
        throw ValidationError("symmetric set is not closed under inverses");
    }

    int cap = 0;
    if (kind == SetKind::Monoid) {
        cap = options.certificate_cap > 0 ? options.certificate_cap
                                          : std::max(16, 2 * spec.torsion().order() + 2);
    }
    set.check_ = check_generates(spec, set.elements_, cap, options.budget);
    switch (set.check_.verdict) {
        case GenerationCheck::Verdict::ProperSubgroup:
            throw GenerationError("set does not generate the group: " + set.check_.detail);
        case GenerationCheck::Verdict::Inconclusive:
            if (options.require_monoid_certificate) {
                throw GenerationError("monoid generation not certified: " + set.check_.detail);
            }
            set.monoid_certified_ = false;
            break;
        case GenerationCheck::Verdict::Generates:
            set.monoid_certified_ = true;
            break;
    }
    return set;
}

GeneratingSet GeneratingSet::unchecked(const GroupSpec& spec, std::vector<GroupElement> elements,
                                       SetKind kind) {
    std::vector<GroupElement> gens = dedupe_conforming(spec, elements);
    if (gens.empty()) throw ValidationError("empty generating set");
    GeneratingSet set(spec, std::move(gens), kind);
    if (kind == SetKind::Symmetric && !set.closed_under_inverse()) {
        throw ValidationError("symmetric set is not closed under inverses");
    }
    set.check_.verdict = GenerationCheck::Verdict::Inconclusive;
    set.check_.detail = "generation check skipped";
    set.monoid_certified_ = kind == SetKind::Symmetric;
    return set;
}

bool GeneratingSet::closed_under_inverse() const {
    std::unordered_set<GroupElement, ElementHash> all(elements_.begin(), elements_.end());
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const GroupElement& g) { return all.contains(group_.inv(g)); });
}

std::vector<GroupElement> symmetric_closure(const GroupSpec& spec,
                                            std::span<const GroupElement> elements) {
    std::vector<GroupElement> out = dedupe_conforming(spec, elements);
    std::unordered_set<GroupElement, ElementHash> seen(out.begin(), out.end());
    const std::size_t original = out.size();
    for (std::size_t i = 0; i < original; ++i) {
        GroupElement inv = spec.inv(out[i]);
        if (seen.insert(inv).second) out.push_back(std::move(inv));
    }
    return out;
}

} // namespace abelgrowth
