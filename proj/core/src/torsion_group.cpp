#include "abelgrowth/torsion_group.hpp"

#include "abelgrowth/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace abelgrowth {

namespace {

void check_order_cap(long long n) {
    if (n < 1 || n > TorsionGroup::kOrderCap) {
        throw ValidationError("torsion order " + std::to_string(n) +
                              " outside [1, " + std::to_string(TorsionGroup::kOrderCap) + "]");
    }
}

} // namespace

TorsionGroup TorsionGroup::trivial() {
    TorsionGroup g;
    g.order_ = 1;
    g.table_ = {0};
    g.inv_ = {0};
    return g;
}

TorsionGroup TorsionGroup::from_invariant_factors(const std::vector<int>& factors) {
    long long order = 1;
    for (int f : factors) {
        if (f < 2) {
            throw ValidationError("invariant factor " + std::to_string(f) + " must be >= 2");
        }
        order *= f;
        check_order_cap(order);
    }
    TorsionGroup g;
    g.order_ = static_cast<int>(order);
    g.factors_ = factors;
    g.abelian_ = true;

    // Mixed-radix element index: the last factor varies fastest. Addition is
    // componentwise mod each factor, so the table needs no axiom check.
    const int n = g.order_;
    const int m = static_cast<int>(factors.size());
    std::vector<int> digits_a(m), digits_b(m);
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        int rest = a;
        for (int i = m - 1; i >= 0; --i) {
            digits_a[i] = rest % factors[i];
            rest /= factors[i];
        }
        for (int b = 0; b < n; ++b) {
            rest = b;
            for (int i = m - 1; i >= 0; --i) {
                digits_b[i] = rest % factors[i];
                rest /= factors[i];
            }
            int idx = 0;
            for (int i = 0; i < m; ++i) {
                idx = idx * factors[i] + (digits_a[i] + digits_b[i]) % factors[i];
            }
            g.table_[static_cast<std::size_t>(a) * n + b] = idx;
        }
    }
    g.build_inverses();
    return g;
}

TorsionGroup TorsionGroup::from_table(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    check_order_cap(n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n) {
            throw ValidationError("torsion table is not square");
        }
        for (int v : row) {
            if (v < 0 || v >= n) {
                throw ValidationError("torsion table entry out of range");
            }
        }
    }
    // Identity must be element 0.
    for (int a = 0; a < n; ++a) {
        if (table[0][a] != a || table[a][0] != a) {
            throw ValidationError("element 0 of the torsion table is not an identity");
        }
    }
    // Latin square: each row and column is a permutation.
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            if (seen[table[a][b]]++) throw ValidationError("torsion table row is not a permutation");
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            if (seen[table[b][a]]++) throw ValidationError("torsion table column is not a permutation");
        }
    }
    // Associativity by brute force.
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int ab = table[a][b];
            for (int c = 0; c < n; ++c) {
                if (table[ab][c] != table[a][table[b][c]]) {
                    throw ValidationError("torsion table is not associative at (" +
                                          std::to_string(a) + "," + std::to_string(b) + "," +
                                          std::to_string(c) + ")");
                }
            }
        }
    }

    TorsionGroup g;
    g.order_ = n;
    g.table_.assign(static_cast<std::size_t>(n) * n, 0);
    g.abelian_ = true;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            g.table_[static_cast<std::size_t>(a) * n + b] = table[a][b];
            if (table[a][b] != table[b][a]) g.abelian_ = false;
        }
    }
    g.build_inverses();
    return g;
}

TorsionGroup TorsionGroup::direct_product(const TorsionGroup& a, const TorsionGroup& b) {
    const long long order = static_cast<long long>(a.order_) * b.order_;
    check_order_cap(order);
    TorsionGroup g;
    g.order_ = static_cast<int>(order);
    g.abelian_ = a.abelian_ && b.abelian_;
    if (!a.factors_.empty() || a.order_ == 1) {
        if (!b.factors_.empty() || b.order_ == 1) {
            g.factors_ = a.factors_;
            g.factors_.insert(g.factors_.end(), b.factors_.begin(), b.factors_.end());
        }
    }
    g.table_.assign(static_cast<std::size_t>(g.order_) * g.order_, 0);
    const int nb = b.order_;
    for (int x = 0; x < g.order_; ++x) {
        const int xa = x / nb, xb = x % nb;
        for (int y = 0; y < g.order_; ++y) {
            const int ya = y / nb, yb = y % nb;
            g.table_[static_cast<std::size_t>(x) * g.order_ + y] =
                a.mul(xa, ya) * nb + b.mul(xb, yb);
        }
    }
    g.build_inverses();
    return g;
}

void TorsionGroup::build_inverses() {
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[a] = b;
                break;
            }
        }
        if (inv_[a] < 0) {
            throw ValidationError("torsion element " + std::to_string(a) + " has no inverse");
        }
    }
}

int TorsionGroup::mul(int a, int b) const {
    if (a < 0 || a >= order_ || b < 0 || b >= order_) {
        throw ValidationError("torsion index out of range");
    }
    return table_[static_cast<std::size_t>(a) * order_ + b];
}

int TorsionGroup::inv(int a) const {
    if (a < 0 || a >= order_) throw ValidationError("torsion index out of range");
    return inv_[a];
}

int TorsionGroup::element_order(int a) const {
    if (a < 0 || a >= order_) throw ValidationError("torsion index out of range");
    int n = 1;
    int x = a;
    while (x != 0) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

int TorsionGroup::involution_count() const {
    int c = 0;
    for (int a = 0; a < order_; ++a) {
        if (mul(a, a) == 0) ++c;
    }
    return c;
}

std::vector<std::vector<int>> TorsionGroup::table() const {
    std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            t[a][b] = table_[static_cast<std::size_t>(a) * order_ + b];
        }
    }
    return t;
}

TorsionGroup symmetric_group(int n) {
    if (n < 1 || n > 7) {
        throw ValidationError("symmetric_group supports 1 <= n <= 7");
    }
    std::vector<int> letters(n);
    std::iota(letters.begin(), letters.end(), 0);
    std::vector<std::vector<int>> perms;
    std::vector<int> p = letters;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int order = static_cast<int>(perms.size());
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> comp(n);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            // (a*b)(x) = a(b(x)), matching left-to-right application of b then a.
            for (int x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            table[a][b] = index_of(comp);
        }
    }
    return TorsionGroup::from_table(std::move(table));
}

} // namespace abelgrowth
