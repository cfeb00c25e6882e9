#pragma once

// Exact integer linear algebra helpers, internal to the library. Everything
// runs over arbitrary-precision integers; intermediate entries in elimination
// can exceed 64 bits even for small inputs.

#include "abelgrowth/numeric.hpp"

#include <cstdint>
#include <vector>

namespace abelgrowth::detail {

using Mat = std::vector<std::vector<Count>>;

struct SmithResult {
    // Nonzero invariant factors d1 | d2 | ... | dr, all positive.
    std::vector<Count> invariant_factors;
    int rank = 0;
    // Basis of { x : A x = 0 }, one vector per column-space deficiency.
    std::vector<std::vector<Count>> kernel_basis;
};

SmithResult smith_normal_form(Mat a);

Count determinant(Mat a);

// adj(a) with adj(a) * a = a * adj(a) = det(a) * I.
Mat adjugate(const Mat& a);

// Rank over GF(2) of a list of bit rows (each at most 64 columns wide).
int f2_rank(std::vector<std::uint64_t> rows);

} // namespace abelgrowth::detail
