#include "abelgrowth/formulas.hpp"

#include "abelgrowth/bfs.hpp"
#include "abelgrowth/errors.hpp"

#include <string>

namespace abelgrowth {

namespace {

void validate_family(const FamilyParams& p) {
    if (p.torsion_order < 1) throw ValidationError("family torsion order must be >= 1");
    if (p.k < 1) throw ValidationError("family parameter k must be >= 1");
}

} // namespace

Count binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count c = 1;
    for (int i = 1; i <= k; ++i) {
        c *= n - k + i;
        c /= i;
    }
    return c;
}

Count sigma_family(const FamilyParams& p, int r) {
    validate_family(p);
    if (r < 0) throw ValidationError("radius must be nonnegative");
    if (r == 0) return 1;
    const long long n = p.torsion_order, k = p.k;
    switch (p.family) {
        case Family::Even:
            if (r == 1) return n - 1 + 2 * k;
            return 2 * k * n;
        case Family::Odd:
            if (r == 1) return n + 2 * k - 1;
            if (r == 2) return n * (2 * k - 1) + n + 2 * k - 2;
            return 2 * n * (2 * k - 1);
        case Family::Monoid:
            return n * k;
    }
    throw ValidationError("unknown family");
}

GrowthSeries family_series(const FamilyParams& p, int max_radius) {
    validate_family(p);
    if (max_radius < 0) throw ValidationError("radius must be nonnegative");
    std::vector<Count> sigma;
    sigma.reserve(static_cast<std::size_t>(max_radius) + 1);
    for (int r = 0; r <= max_radius; ++r) sigma.push_back(sigma_family(p, r));
    Provenance prov = Provenance::ClosedFormEven;
    if (p.family == Family::Odd) prov = Provenance::ClosedFormOdd;
    if (p.family == Family::Monoid) prov = Provenance::ClosedFormMonoid;
    return GrowthSeries(std::move(sigma), prov);
}

std::vector<GroupElement> monoid_family_ball(const GroupSpec& spec, int k, int r) {
    if (spec.rank() != 1) throw ValidationError("monoid family lives in groups of rank 1");
    if (k < 1) throw ValidationError("family parameter k must be >= 1");
    if (r < 0) throw ValidationError("radius must be nonnegative");
    std::vector<GroupElement> ball;
    if (r == 0) {
        ball.push_back(spec.identity());
        return ball;
    }
    const int n = spec.torsion().order();
    ball.reserve(1 + static_cast<std::size_t>(n) * (static_cast<std::size_t>(r) * k));
    ball.push_back(GroupElement{{-static_cast<std::int64_t>(r)}, 0});
    const std::int64_t lo = -(static_cast<std::int64_t>(r) - 1);
    const std::int64_t hi = static_cast<std::int64_t>(r) * (k - 1);
    for (std::int64_t x = lo; x <= hi; ++x) {
        for (int f = 0; f < n; ++f) ball.push_back(GroupElement{{x}, f});
    }
    return ball;
}

GrowthSeries convolve_sigma(const GrowthSeries& a, const GrowthSeries& b, int max_radius) {
    if (max_radius < 0) throw ValidationError("radius must be nonnegative");
    if (a.max_radius() < max_radius || b.max_radius() < max_radius) {
        throw ValidationError("convolution inputs must cover radius " + std::to_string(max_radius));
    }
    std::vector<Count> sigma(static_cast<std::size_t>(max_radius) + 1, Count(0));
    for (int r = 0; r <= max_radius; ++r) {
        Count s = 0;
        for (int i = 0; i <= r; ++i) s += a.sigma_at(i) * b.sigma_at(r - i);
        sigma[static_cast<std::size_t>(r)] = std::move(s);
    }
    return GrowthSeries(std::move(sigma), Provenance::Convolution);
}

Count beta_standard(int d, int r) {
    if (d < 0 || r < 0) throw ValidationError("beta_standard needs d, r >= 0");
    Count total = 0;
    for (int i = 0; i <= std::min(d, r); ++i) {
        total += (Count(1) << i) * binomial(d, i) * binomial(r, i);
    }
    return total;
}

GrowthSeries standard_symmetric_series(int d, int max_radius) {
    std::vector<Count> sigma;
    sigma.reserve(static_cast<std::size_t>(max_radius) + 1);
    Count prev = 0;
    for (int r = 0; r <= max_radius; ++r) {
        Count b = beta_standard(d, r);
        sigma.push_back(b - prev);
        prev = std::move(b);
    }
    return GrowthSeries(std::move(sigma), Provenance::ClosedFormStandard);
}

Count beta_standard_plus(int d, int r) {
    if (d < 0 || r < 0) throw ValidationError("beta_standard_plus needs d, r >= 0");
    // Group the ball by c = number of copies of -(e_1+...+e_d) in the minimal
    // word for x; then x + c*1 runs over nonnegative vectors of coordinate sum
    // at most r - c, with some zero coordinate when c > 0 (otherwise one copy
    // of the negative vector could be cancelled).
    Count total = binomial(r + d, d); // c = 0: all x in N^d with |x| <= r
    for (int c = 1; c <= r; ++c) {
        total += binomial(r - c + d, d) - binomial(r - c, d);
    }
    return total;
}

GrowthSeries standard_monoid_series(int d, int max_radius) {
    std::vector<Count> sigma;
    sigma.reserve(static_cast<std::size_t>(max_radius) + 1);
    Count prev = 0;
    for (int r = 0; r <= max_radius; ++r) {
        Count b = beta_standard_plus(d, r);
        sigma.push_back(b - prev);
        prev = std::move(b);
    }
    return GrowthSeries(std::move(sigma), Provenance::ClosedFormStandard);
}

ParityPrediction parity_prediction(const GeneratingSet& set, const ResourceBudget& budget) {
    if (set.kind() != SetKind::Symmetric) {
        throw ValidationError("parity prediction applies to symmetric sets only");
    }
    ParityPrediction p;
    p.census = set.group().order_le2_census();
    p.residue = p.census % 2;
    p.threshold = torsion_diameter(set, 0, budget).involutions;
    return p;
}

ParityReport verify_parity(const GrowthSeries& series, const ParityPrediction& prediction) {
    ParityReport report;
    for (int r = prediction.threshold; r <= series.max_radius(); ++r) {
        if (series.beta_at(r) % 2 != prediction.residue) {
            report.consistent = false;
            report.first_violation = r;
            break;
        }
    }
    return report;
}

} // namespace abelgrowth
