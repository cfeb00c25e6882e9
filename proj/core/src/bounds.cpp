#include "abelgrowth/bounds.hpp"

#include "abelgrowth/bfs.hpp"
#include "abelgrowth/errors.hpp"
#include "abelgrowth/formulas.hpp"
#include "exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>

namespace abelgrowth {

namespace {

std::string vec_to_string(std::span<const std::int64_t> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ')';
    return os.str();
}

// Odometer over the box [-b, b]^d. Returns false after the last point.
bool next_point(std::vector<std::int64_t>& x, std::int64_t b) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < b) {
            ++x[i];
            std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i), -b);
            return true;
        }
    }
    return false;
}

double log_count(const Count& c) {
    if (c <= 0) throw ValidationError("logarithm of a nonpositive count");
    const double as_double = c.convert_to<double>();
    if (std::isfinite(as_double)) return std::log(as_double);
    const unsigned bits = boost::multiprecision::msb(c);
    const Count top = c >> (bits - 52);
    return std::log(top.convert_to<double>()) + (bits - 52) * std::log(2.0);
}

} // namespace

std::int64_t MinimalRep::length() const {
    std::int64_t total = v_count;
    for (std::int64_t c : coeffs) {
        if (__builtin_add_overflow(total, c, &total)) {
            throw ResourceError("overflow in representation length");
        }
    }
    return total;
}

MinimalRep minimal_rep(std::span<const std::int64_t> x) {
    MinimalRep rep;
    std::int64_t lowest = 0;
    for (std::int64_t c : x) lowest = std::min(lowest, c);
    rep.v_count = -lowest; // max(0, -min x_i)
    rep.coeffs.reserve(x.size());
    for (std::int64_t c : x) {
        std::int64_t shifted;
        if (__builtin_add_overflow(c, rep.v_count, &shifted)) {
            throw ResourceError("overflow in minimal representation");
        }
        rep.coeffs.push_back(shifted);
    }
    return rep;
}

PhiContext build_phi(const GeneratingSet& s) {
    const GroupSpec& g = s.group();
    if (g.torsion().order() != 1 || g.rank() < 1) {
        throw ValidationError("phi is defined for generating sets of Z^d, d >= 1");
    }
    if (s.kind() != SetKind::Monoid) {
        throw ValidationError("phi targets monoid generating sets; symmetric sets reduce to the "
                              "basis argument directly");
    }
    const int d = g.rank();
    const auto& members = s.elements();

    PhiContext ctx(s);

    // Greedy scan for a rationally independent d-subset: keep a member iff it
    // raises the rank of the kept collection.
    detail::Mat kept;
    for (std::size_t i = 0; i < members.size() && static_cast<int>(ctx.basis_idx_.size()) < d;
         ++i) {
        std::vector<Count> row(d);
        for (int j = 0; j < d; ++j) row[j] = members[i].vec[j];
        kept.push_back(row);
        if (detail::smith_normal_form(kept).rank == static_cast<int>(kept.size())) {
            ctx.basis_idx_.push_back(static_cast<int>(i));
        } else {
            kept.pop_back();
        }
    }
    if (static_cast<int>(ctx.basis_idx_.size()) < d) {
        throw InvariantViolation(
            "validated generating set contains no d rationally independent vectors");
    }

    detail::Mat basis(d, std::vector<Count>(d));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) basis[i][j] = members[ctx.basis_idx_[j]].vec[i];
    }
    ctx.det_ = detail::determinant(basis);
    if (ctx.det_ == 0) {
        throw InvariantViolation("independent subset produced a singular basis matrix");
    }
    ctx.adj_ = detail::adjugate(basis);
    // cpp_rational rejects negative denominators, so fold the sign of the
    // determinant into the adjugate; coordinate() divides one by the other.
    if (ctx.det_ < 0) {
        ctx.det_ = -ctx.det_;
        for (auto& row : ctx.adj_) {
            for (auto& entry : row) entry = -entry;
        }
    }

    for (int j = 0; j < d; ++j) {
        int best = -1;
        Ratio best_val;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Ratio val = ctx.coordinate(j, members[i].vec);
            if (best < 0 || val < best_val) {
                best = static_cast<int>(i);
                best_val = val;
            }
        }
        if (best_val >= 0) {
            throw InvariantViolation(
                "no member with negative coordinate " + std::to_string(j) +
                "; the set cannot monoid-generate Z^d");
        }
        ctx.minimizer_idx_.push_back(best);
        ctx.minimizer_scale_.push_back(-best_val);
    }
    return ctx;
}

Ratio PhiContext::coordinate(int j, std::span<const std::int64_t> x) const {
    if (j < 0 || j >= dim()) throw ValidationError("coordinate index out of range");
    if (static_cast<int>(x.size()) != dim()) throw ValidationError("vector has wrong dimension");
    Count num = 0;
    for (int i = 0; i < dim(); ++i) num += adj_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * x[i];
    return Ratio(num, det_);
}

int PhiContext::m_of(std::span<const std::int64_t> x) const {
    if (static_cast<int>(x.size()) != dim()) throw ValidationError("vector has wrong dimension");
    int m = 0;
    for (int j = 1; j < dim(); ++j) {
        if (x[j] < x[m]) m = j;
    }
    return m;
}

int PhiContext::m_prime_of(std::span<const std::int64_t> y) const {
    int m = 0;
    Ratio best = coordinate(0, y) / minimizer_scale_[0];
    for (int j = 1; j < dim(); ++j) {
        const Ratio val = coordinate(j, y) / minimizer_scale_[static_cast<std::size_t>(j)];
        if (val < best) {
            best = val;
            m = j;
        }
    }
    return m;
}

std::vector<std::int64_t> PhiContext::apply(std::span<const std::int64_t> x) const {
    const int d = dim();
    const MinimalRep rep = minimal_rep(x);
    const auto& members = set_.elements();
    const GroupElement& v = members[static_cast<std::size_t>(minimizer_idx_[static_cast<std::size_t>(m_of(x))])];

    std::vector<std::int64_t> y(d);
    for (int i = 0; i < d; ++i) {
        __int128 acc = static_cast<__int128>(rep.v_count) * v.vec[i];
        for (int j = 0; j < d; ++j) {
            acc += static_cast<__int128>(rep.coeffs[static_cast<std::size_t>(j)]) *
                   members[static_cast<std::size_t>(basis_idx_[static_cast<std::size_t>(j)])].vec[i];
        }
        if (acc > INT64_MAX || acc < INT64_MIN) throw ResourceError("coordinate overflow in phi");
        y[i] = static_cast<std::int64_t>(acc);
    }
    return y;
}

PhiVerification verify_phi(const PhiContext& ctx, int box_halfwidth, int radius,
                           const ResourceBudget& budget) {
    if (box_halfwidth < 1 || radius < 1) throw ValidationError("box and radius must be >= 1");
    const int d = ctx.dim();

    PhiVerification report;
    report.box = box_halfwidth;
    report.radius = radius;

    // (a) injectivity on the box.
    {
        std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> image;
        std::vector<std::int64_t> x(d, -box_halfwidth);
        do {
            auto y = ctx.apply(x);
            auto [it, fresh] = image.emplace(std::move(y), x);
            if (!fresh) {
                report.injective = false;
                report.failure = "phi collision: " + vec_to_string(it->second) + " and " +
                                 vec_to_string(x) + " map to " + vec_to_string(it->first);
                break;
            }
        } while (next_point(x, box_halfwidth));
    }

    // One BFS gives both the membership snapshot and the series.
    BfsOptions options;
    options.max_radius = radius;
    options.keep_ball = true;
    options.budget = budget;
    const BfsResult run = bfs_growth(ctx.set(), options);

    // (b) standard monoid balls land in S-balls of the same radius.
    {
        std::vector<std::int64_t> x(d, -radius);
        do {
            const MinimalRep rep = minimal_rep(x);
            if (rep.length() > radius) continue;
            const GroupElement y{ctx.apply(x), 0};
            const auto dist = run.ball->distance_of(y);
            if (!dist || *dist > rep.length()) {
                report.balls_contained = false;
                if (report.failure.empty()) {
                    report.failure = "phi" + vec_to_string(x) + " = " + vec_to_string(y.vec) +
                                     " escapes the S-ball of radius " +
                                     std::to_string(rep.length());
                }
                break;
            }
        } while (next_point(x, radius));
    }

    // (c) sign pattern and index reconstruction.
    {
        std::vector<std::int64_t> x(d, -box_halfwidth);
        do {
            const bool nonneg = std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c >= 0; });
            const auto y = ctx.apply(x);
            bool image_nonneg = true;
            for (int j = 0; j < d; ++j) {
                if (ctx.coordinate(j, y) < 0) {
                    image_nonneg = false;
                    break;
                }
            }
            if (image_nonneg != nonneg) {
                report.reconstruction_ok = false;
                if (report.failure.empty()) {
                    report.failure = "sign pattern of phi" + vec_to_string(x) +
                                     " disagrees with the orthant membership of the argument";
                }
                break;
            }
            if (!nonneg && ctx.m_prime_of(y) != ctx.m_of(x)) {
                report.reconstruction_ok = false;
                if (report.failure.empty()) {
                    report.failure = "m'(phi(x)) != m(x) at x = " + vec_to_string(x);
                }
                break;
            }
        } while (next_point(x, box_halfwidth));
    }

    for (int r = 0; r <= radius; ++r) {
        if (run.series.beta_at(r) < beta_standard_plus(d, r)) {
            report.beta_dominates = false;
            if (report.failure.empty()) {
                report.failure = "beta(" + std::to_string(r) + ") fell below the standard monoid ball";
            }
            break;
        }
    }
    return report;
}

DominanceReport symmetric_min_growth(const GeneratingSet& s, int max_radius,
                                     const ResourceBudget& budget) {
    if (s.kind() != SetKind::Symmetric) throw ValidationError("expected a symmetric set");
    if (s.group().torsion().order() != 1 || s.group().rank() < 1) {
        throw ValidationError("minimal growth comparison targets sets of Z^d, d >= 1");
    }
    BfsOptions options;
    options.max_radius = max_radius;
    options.budget = budget;
    DominanceReport report{true, -1, bfs_growth(s, options).series};
    const int d = s.group().rank();
    for (int r = 0; r <= max_radius; ++r) {
        if (report.series.beta_at(r) < beta_standard(d, r)) {
            report.holds = false;
            report.first_violation = r;
            break;
        }
    }
    return report;
}

ReductionReport reduction_inequality(const GeneratingSet& s, int max_radius,
                                     const ResourceBudget& budget) {
    const GroupSpec& g = s.group();
    if (g.rank() < 1) throw ValidationError("reduction needs rank >= 1");

    const int diam = torsion_diameter(s, 0, budget).full;

    BfsOptions options;
    options.max_radius = max_radius;
    options.budget = budget;
    GrowthSeries beta_group = bfs_growth(s, options).series;

    GroupSpec lattice(g.rank(), TorsionGroup::trivial());
    std::vector<GroupElement> projected;
    projected.reserve(s.elements().size());
    for (const GroupElement& e : s.elements()) projected.push_back(GroupElement{e.vec, 0});
    options.max_radius = std::max(0, max_radius - diam);
    GrowthSeries beta_projection = bfs_growth_elements(lattice, projected, options).series;

    ReductionReport report{diam, true, -1, std::move(beta_group), std::move(beta_projection)};
    const Count torsion_order = g.torsion().order();
    for (int r = diam; r <= max_radius; ++r) {
        if (report.beta_group.beta_at(r) < torsion_order * report.beta_projection.beta_at(r - diam)) {
            report.holds = false;
            report.first_violation = r;
            break;
        }
    }
    return report;
}

TorsionBoundReport torsion_upper_bound(const GrowthSeries& series, int rank, RadiusWindow window,
                                       SetKind kind) {
    if (rank < 1) throw ValidationError("torsion bound needs rank >= 1");
    if (window.lo < 1 || window.lo > window.hi || window.hi > series.max_radius()) {
        throw ValidationError("invalid radius window");
    }
    TorsionBoundReport report;
    report.window = window;
    report.monoid_mode = kind == SetKind::Monoid;
    for (int r = window.lo; r <= window.hi; ++r) {
        const Count denom =
            report.monoid_mode ? beta_standard_plus(rank, r) : beta_standard(rank, r);
        Ratio ratio(series.beta_at(r), denom);
        if (r == window.lo || ratio > report.max_ratio) {
            report.max_ratio = std::move(ratio);
            report.argmax_radius = r;
        }
    }
    report.candidate_floor =
        boost::multiprecision::numerator(report.max_ratio) /
        boost::multiprecision::denominator(report.max_ratio);
    return report;
}

RankEstimate rank_estimate(const GrowthSeries& series, RadiusWindow window) {
    if (window.lo < 2 || window.lo >= window.hi || window.hi > series.max_radius()) {
        throw ValidationError("rank estimation needs a window [lo, hi], 2 <= lo < hi <= computed radius");
    }
    const int n = window.hi - window.lo + 1;
    double sx = 0, sy = 0;
    std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = std::log(static_cast<double>(window.lo + i));
        ys[static_cast<std::size_t>(i)] = log_count(series.beta_at(window.lo + i));
        sx += xs[static_cast<std::size_t>(i)];
        sy += ys[static_cast<std::size_t>(i)];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - mx;
        sxx += dx * dx;
        sxy += dx * (ys[static_cast<std::size_t>(i)] - my);
    }
    RankEstimate est;
    est.slope = sxy / sxx;
    est.rounded = static_cast<int>(std::lround(est.slope));
    double ss = 0;
    for (int i = 0; i < n; ++i) {
        const double fit = my + est.slope * (xs[static_cast<std::size_t>(i)] - mx);
        const double e = ys[static_cast<std::size_t>(i)] - fit;
        ss += e * e;
    }
    est.rms_residual = std::sqrt(ss / n);
    return est;
}

int torsion_f2_rank(const GroupSpec& spec, std::span<const GroupElement> elements) {
    const auto& factors = spec.torsion().invariant_factors();
    if (!std::all_of(factors.begin(), factors.end(), [](int f) { return f == 2; })) {
        throw ValidationError("GF(2) rank argument needs torsion of the form (Z/2)^k");
    }
    std::vector<std::uint64_t> rows;
    rows.reserve(elements.size());
    for (const GroupElement& g : elements) {
        spec.require_conforms(g);
        // With all invariant factors equal to 2, the torsion index is its own
        // bit vector.
        rows.push_back(static_cast<std::uint64_t>(g.tor));
    }
    return detail::f2_rank(std::move(rows));
}

int minimal_abelian_generators(const std::vector<int>& invariant_factors) {
    std::map<int, int> per_prime;
    for (int f : invariant_factors) {
        if (f < 2) throw ValidationError("invariant factor must be >= 2");
        int rest = f;
        for (int p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                ++per_prime[p];
                while (rest % p == 0) rest /= p;
            }
        }
        if (rest > 1) ++per_prime[rest];
    }
    int best = 0;
    for (const auto& [p, count] : per_prime) best = std::max(best, count);
    return best;
}

ConverseReport converse_counterexample(int d) {
    if (d < 0 || d > 8) throw ValidationError("converse example supports 0 <= d <= 8");
    const int q = 1 << (d + 3);

    GroupSpec g(d, TorsionGroup::from_invariant_factors({q}));
    std::vector<GroupElement> s;
    for (int i = 0; i < d; ++i) {
        GroupElement e = g.identity();
        e.vec[static_cast<std::size_t>(i)] = 1;
        s.push_back(e);
    }
    GroupElement t = g.identity();
    t.tor = 1;
    s.push_back(t);
    t.tor = q - 1;
    s.push_back(t);

    BfsOptions options;
    options.max_radius = 1;
    const GrowthSeries ball = bfs_growth_elements(g, s, options).series;

    const std::vector<int> gprime_factors(static_cast<std::size_t>(d) + 3, 2);

    ConverseReport report;
    report.d = d;
    report.beta_g_at_1 = ball.beta_at(1);
    report.torsion_span_requirement = minimal_abelian_generators(gprime_factors);
    report.beta_gprime_at_1_floor = Count(report.torsion_span_requirement) + 1;
    Count gprime_order = 1;
    for (int f : gprime_factors) gprime_order *= f;
    report.hypotheses_match = gprime_order == q;
    report.separated = report.beta_gprime_at_1_floor > report.beta_g_at_1;
    return report;
}

} // namespace abelgrowth
