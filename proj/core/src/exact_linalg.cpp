#include "exact_linalg.hpp"

#include "abelgrowth/errors.hpp"

#include <algorithm>
#include <utility>

namespace abelgrowth::detail {

namespace {

Count gcd(Count a, Count b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Count t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

} // namespace

SmithResult smith_normal_form(Mat a) {
    const int n = static_cast<int>(a.size());
    const int m = n ? static_cast<int>(a[0].size()) : 0;
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != m) throw ValidationError("ragged matrix");
    }

    // w accumulates the column operations so that (original a) * w = reduced a.
    Mat w(m, std::vector<Count>(m, 0));
    for (int j = 0; j < m; ++j) w[j][j] = 1;

    auto swap_cols = [&](int j1, int j2) {
        for (int i = 0; i < n; ++i) std::swap(a[i][j1], a[i][j2]);
        for (int i = 0; i < m; ++i) std::swap(w[i][j1], w[i][j2]);
    };
    auto add_col = [&](int dst, int src, const Count& q) {
        // col_dst += q * col_src
        for (int i = 0; i < n; ++i) a[i][dst] += q * a[i][src];
        for (int i = 0; i < m; ++i) w[i][dst] += q * w[i][src];
    };

    int t = 0;
    while (t < n && t < m) {
        // Pick the absolutely smallest nonzero entry of the trailing block as
        // pivot; this keeps the Euclidean reduction short.
        int pi = -1, pj = -1;
        Count best = 0;
        for (int i = t; i < n; ++i) {
            for (int j = t; j < m; ++j) {
                if (a[i][j] == 0) continue;
                Count v = a[i][j] < 0 ? Count(-a[i][j]) : a[i][j];
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        std::swap(a[t], a[pi]);
        if (pj != t) swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Count q = a[i][t] / a[t][t];
                if (q != 0) {
                    for (int j = t; j < m; ++j) a[i][j] -= q * a[t][j];
                }
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < m; ++j) {
                if (a[t][j] == 0) continue;
                Count q = a[t][j] / a[t][t];
                if (q != 0) add_col(j, t, -q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) break;
        }
        ++t;
    }
    const int rank = t;

    SmithResult res;
    res.rank = rank;
    res.invariant_factors.reserve(rank);
    for (int i = 0; i < rank; ++i) {
        res.invariant_factors.push_back(a[i][i] < 0 ? Count(-a[i][i]) : a[i][i]);
    }
    // The elimination above diagonalizes but does not enforce divisibility;
    // diag(x, y) and diag(gcd, lcm) present the same subgroup, so the chain
    // can be repaired on the diagonal alone.
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < rank; ++i) {
            if (res.invariant_factors[i + 1] % res.invariant_factors[i] != 0) {
                Count g = gcd(res.invariant_factors[i], res.invariant_factors[i + 1]);
                Count l = res.invariant_factors[i] / g * res.invariant_factors[i + 1];
                res.invariant_factors[i] = g;
                res.invariant_factors[i + 1] = l;
                changed = true;
            }
        }
    }

    for (int j = rank; j < m; ++j) {
        std::vector<Count> k(m);
        for (int i = 0; i < m; ++i) k[i] = w[i][j];
        res.kernel_basis.push_back(std::move(k));
    }
    return res;
}

Count determinant(Mat a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) throw ValidationError("determinant of non-square matrix");
    }
    if (n == 0) return 1;
    // Bareiss fraction-free elimination; every division below is exact.
    Count prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    s = i;
                    break;
                }
            }
            if (s < 0) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Count(-a[n - 1][n - 1]);
}

Mat adjugate(const Mat& a) {
    const int n = static_cast<int>(a.size());
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) throw ValidationError("adjugate of non-square matrix");
    }
    Mat adj(n, std::vector<Count>(n, 0));
    if (n == 0) return adj;
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    Mat minor(n - 1, std::vector<Count>(n - 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[mr][mc++] = a[r][c];
                }
                ++mr;
            }
            Count cof = determinant(minor);
            if ((i + j) % 2) cof = -cof;
            adj[j][i] = cof; // transpose of the cofactor matrix
        }
    }
    return adj;
}

int f2_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 63; bit >= 0 && rank < static_cast<int>(rows.size()); --bit) {
        const std::uint64_t mask = 1ULL << bit;
        int pivot = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

} // namespace abelgrowth::detail
