#pragma once

#include "abelgrowth/budget.hpp"
#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/growth_series.hpp"
#include "abelgrowth/numeric.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abelgrowth {

// Unique shortest expression of x over the standard monoid set
// {e_1, ..., e_d, v_d = -(e_1+...+e_d)}: x = sum coeffs[j]*e_j + v_count*v_d
// with everything nonnegative and min(coeffs) = 0 whenever v_count > 0.
struct MinimalRep {
    std::vector<std::int64_t> coeffs;
    std::int64_t v_count = 0;

    std::int64_t length() const;
};

MinimalRep minimal_rep(std::span<const std::int64_t> x);

// Precomputed data for the injection of standard monoid balls into the balls
// of an arbitrary monoid generating set S of Z^d: an ordered rationally
// independent subset E of S, exact coordinate functionals with respect to E,
// and for each coordinate the member of S with the most negative (and
// minimal) E-coordinate. Selection is deterministic: E by greedy scan in
// input order, minimizers with earliest-index tie-breaking.
class PhiContext {
public:
    const GeneratingSet& set() const noexcept { return set_; }
    int dim() const noexcept { return static_cast<int>(basis_idx_.size()); }
    const std::vector<int>& basis_indices() const noexcept { return basis_idx_; }
    const std::vector<int>& minimizer_indices() const noexcept { return minimizer_idx_; }

    // j-th coordinate of x with respect to the basis E, exact.
    Ratio coordinate(int j, std::span<const std::int64_t> x) const;

    // Least index of a minimal standard coordinate of x (0-based).
    int m_of(std::span<const std::int64_t> x) const;

    // Least index minimizing coordinate(j, y) / |coordinate(j, v'_j)|.
    int m_prime_of(std::span<const std::int64_t> y) const;

    std::vector<std::int64_t> apply(std::span<const std::int64_t> x) const;

private:
    friend PhiContext build_phi(const GeneratingSet& s);
    PhiContext(GeneratingSet set) : set_(std::move(set)) {}

    GeneratingSet set_;
    std::vector<int> basis_idx_;
    std::vector<int> minimizer_idx_;
    std::vector<std::vector<Count>> adj_; // adjugate of the basis matrix
    Count det_ = 0;
    std::vector<Ratio> minimizer_scale_; // |pi_j(v'_j)| per coordinate
};

PhiContext build_phi(const GeneratingSet& s);

inline std::vector<std::int64_t> phi(const PhiContext& ctx, std::span<const std::int64_t> x) {
    return ctx.apply(x);
}

// Exhaustive checks of the injection on a finite range:
//  (a) no collisions on the box [-B, B]^d,
//  (b) every x with standard monoid length <= R maps into the S-ball of the
//      same radius,
//  (c) sign/reconstruction: coordinates of phi(x) are all nonnegative exactly
//      when x is, and m'(phi(x)) = m(x) off the nonnegative orthant,
// plus the numeric consequence beta_{Z^d,S}(r) >= beta_standard_plus(d, r)
// for r <= R.
struct PhiVerification {
    int box = 0;
    int radius = 0;
    bool injective = true;
    bool balls_contained = true;
    bool reconstruction_ok = true;
    bool beta_dominates = true;
    std::string failure; // description of the first violation, empty if none

    bool ok() const noexcept {
        return injective && balls_contained && reconstruction_ok && beta_dominates;
    }
};

PhiVerification verify_phi(const PhiContext& ctx, int box_halfwidth, int radius,
                           const ResourceBudget& budget = {});

// Pointwise check that a symmetric set of Z^d grows at least as fast as the
// standard symmetric set.
struct DominanceReport {
    bool holds = true;
    int first_violation = -1;
    GrowthSeries series;
};

DominanceReport symmetric_min_growth(const GeneratingSet& s, int max_radius,
                                     const ResourceBudget& budget = {});

// beta_{G,S}(r) >= |F| * beta_{Z^d,pi(S)}(r - R) for r >= R, where pi drops
// the torsion part and R is the word-distance diameter of the torsion
// elements: every lattice ball element yields |F| distinct group elements
// within R extra steps.
struct ReductionReport {
    int torsion_diameter = 0;
    bool holds = true;
    int first_violation = -1;
    GrowthSeries beta_group;
    GrowthSeries beta_projection;
};

ReductionReport reduction_inequality(const GeneratingSet& s, int max_radius,
                                     const ResourceBudget& budget = {});

struct RadiusWindow {
    int lo = 1;
    int hi = 1;
};

// Largest value of beta(r) / beta_d(r) (symmetric mode) or beta(r) /
// beta_standard_plus(d, r) (monoid mode) over a radius window, as an exact
// rational. The window maximum is a finite-radius stand-in for the limit
// superior that bounds the torsion order from below; candidate_floor is its
// integer part.
struct TorsionBoundReport {
    Ratio max_ratio;
    int argmax_radius = 0;
    Count candidate_floor;
    RadiusWindow window;
    bool monoid_mode = false;
};

TorsionBoundReport torsion_upper_bound(const GrowthSeries& series, int rank, RadiusWindow window,
                                       SetKind kind);

// Least-squares slope of log beta(r) against log r. The only floating-point
// computation in the library.
struct RankEstimate {
    double slope = 0.0;
    int rounded = 0;
    double rms_residual = 0.0;
};

RankEstimate rank_estimate(const GrowthSeries& series, RadiusWindow window);

// Rank over GF(2) of the torsion parts of the elements, for groups whose
// torsion is (Z/2)^k. A set can only generate the group if this rank is k,
// so any set with fewer than k elements is rejected without any enumeration.
int torsion_f2_rank(const GroupSpec& spec, std::span<const GroupElement> elements);

// Smallest size of a generating set of the finite abelian group with these
// invariant factors: max over primes p of the number of factors p divides.
int minimal_abelian_generators(const std::vector<int>& invariant_factors);

// The pair G = Z^d x Z/2^(d+3), G' = Z^d x (Z/2)^(d+3): same rank, same
// torsion order, but the first-radius ball value d+3 realized in G is
// unattainable in G', because any generating set of G' needs at least d+3
// elements just to span the torsion over GF(2).
struct ConverseReport {
    int d = 0;
    Count beta_g_at_1;            // ball count of S in G at radius 1
    int torsion_span_requirement; // d+3, from the GF(2) rank argument
    Count beta_gprime_at_1_floor; // torsion_span_requirement + 1
    bool hypotheses_match = false; // equal ranks and torsion orders
    bool separated = false;        // floor exceeds the realized value
};

ConverseReport converse_counterexample(int d);

} // namespace abelgrowth
