#pragma once

#include "abelgrowth/budget.hpp"
#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/growth_series.hpp"
#include "abelgrowth/numeric.hpp"

#include <vector>

namespace abelgrowth {

Count binomial(int n, int k);

// The three closed-form sphere families realized by rank-1 groups Z x F.
// n is the torsion order |F|, k the width parameter of the set:
//
//   Even:   sigma = 1, n-1+2k, 2kn, 2kn, ...      from ({0} x F) u ([-k, k] x {e})
//   Odd:    sigma = 1, n+2k-1, n(2k-1)+n+2k-2, 2n(2k-1), ...
//                                                  from ({0} x F) u (odd translates)
//   Monoid: sigma = 1, nk, nk, ...                 from {(-1, e)} u ([0, k-1] x F)
//
// The names refer to the parity of |F| in the matching-growth constructions;
// the formulas themselves are valid for any n, k >= 1.
enum class Family { Even, Odd, Monoid };

struct FamilyParams {
    int torsion_order = 1;
    int k = 1;
    Family family = Family::Even;
};

Count sigma_family(const FamilyParams& params, int r);
GrowthSeries family_series(const FamilyParams& params, int max_radius);

// The exact ball of the monoid family at radius r in Z x F:
// {(-r, e)} u ({-(r-1), ..., r(k-1)} x F), of size 1 + nkr for r >= 1.
std::vector<GroupElement> monoid_family_ball(const GroupSpec& spec, int k, int r);

// Sphere series of a direct product equipped with the union of the factor
// sets: distances add across factors, so spheres convolve.
GrowthSeries convolve_sigma(const GrowthSeries& a, const GrowthSeries& b, int max_radius);

// Ball sizes of Z^d with the standard symmetric set {+-e_1, ..., +-e_d}.
Count beta_standard(int d, int r);
GrowthSeries standard_symmetric_series(int d, int max_radius);

// Ball sizes of Z^d with the standard monoid set {e_1, ..., e_d, -(e_1+...+e_d)}.
Count beta_standard_plus(int d, int r);
GrowthSeries standard_monoid_series(int d, int max_radius);

// For a symmetric set, balls are closed under inversion, so elements pair up
// with their inverses and beta(r) has the parity of the number of elements of
// order at most 2, once the ball has swallowed them all.
struct ParityPrediction {
    int residue = 0;   // beta(r) mod 2 for every r >= threshold
    int threshold = 0; // word-distance diameter of the order <= 2 locus
    int census = 0;    // number of elements with g*g = identity
};

ParityPrediction parity_prediction(const GeneratingSet& set, const ResourceBudget& budget = {});

struct ParityReport {
    bool consistent = true;
    int first_violation = -1;
};

ParityReport verify_parity(const GrowthSeries& series, const ParityPrediction& prediction);

} // namespace abelgrowth
