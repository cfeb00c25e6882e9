#pragma once

#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/growth_series.hpp"
#include "abelgrowth/torsion_group.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace abelgrowth {

// Constructions that make non-isomorphic groups Z^d x F share a growth
// function by trading torsion order against the width of the lattice part of
// the set. Even and Odd refer to the parity of the torsion orders involved;
// Monoid trades against a common multiple instead and works for any mix of
// torsion groups.
enum class WitnessRegime { SymmetricEven, SymmetricOdd, Monoid };

std::string_view to_string(WitnessRegime regime) noexcept;

struct WitnessPair {
    GeneratingSet left;
    GeneratingSet right;
    WitnessRegime regime;
    GrowthSeries predicted; // shared sphere series of both sides
};

// Pairs Z^rank x F1 and Z^rank x F2 with symmetric sets of matching growth.
// |F1| and |F2| must have the same parity; the regime follows from it. For
// rank > 1 the rank-1 sets are extended by standard directions, and the
// prediction becomes the corresponding convolution.
WitnessPair witness_symmetric(const TorsionGroup& f1, const TorsionGroup& f2, int rank,
                              int prediction_radius = 50);

// Monoid witnesses for any list of torsion groups whose orders divide a
// common multiple K (default: their lcm): each group Z^rank x F_j gets the
// set {(-1, e)} u ({0, ..., K/|F_j| - 1} x F_j), all with sphere series
// 1, K, K, ... When K = |F_j| the set provably generates the group but the
// monoid certificate does not exist (positive lattice directions are
// unreachable); such sets come back with monoid_certified() == false and the
// growth claim still holds.
struct MonoidWitnesses {
    std::vector<GeneratingSet> sets;
    long long common_multiple = 0;
    GrowthSeries predicted;
};

MonoidWitnesses witness_monoid(const std::vector<TorsionGroup>& torsions, int rank,
                               std::optional<long long> common_multiple = std::nullopt,
                               int prediction_radius = 50);

// Embeds the set into (group) x Z^extra by adjoining standard directions of
// the new coordinates: +-e_i for symmetric sets, e_i and -(e_1+...+e_extra)
// for monoid sets. Growth of the result is the convolution of the factors.
GeneratingSet extend_rank(const GeneratingSet& set, int extra);

// Combines two generated groups into their direct product equipped with
// (S_a x {e}) u ({e} x S_b). Both inputs must have the same kind.
GeneratingSet product_generating_set(const GeneratingSet& a, const GeneratingSet& b);

// Exhaustive check that a pair (x, y) of nonnegative integers is determined
// by x + y and x * y up to order: scans [0, bound]^4 for sum/product
// collisions and records any that are not the same multiset {x, y}.
struct DiophantineReport {
    long long bound = 0;
    long long tuples_scanned = 0;     // (bound + 1)^4, size of the search box
    long long collisions_checked = 0; // quadruples with equal sum and product
    std::vector<std::array<long long, 4>> violations; // (x1, y1, x2, y2)
    bool unique() const noexcept { return violations.empty(); }
};

DiophantineReport diophantine_uniqueness(long long bound);

} // namespace abelgrowth
