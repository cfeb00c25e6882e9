#pragma once

#include <cstdint>
#include <vector>

namespace abelgrowth {

// A finite group given by its full multiplication table. Element 0 is the
// identity. Groups are either built from a list of abelian invariant factors
// (the table is then expanded mixed-radix) or from an explicit table, which
// may be nonabelian. Explicit tables are checked for the group axioms by
// brute force; that is cubic in the order, which is fine below the cap.
class TorsionGroup {
public:
    static constexpr int kOrderCap = 4096;

    static TorsionGroup trivial();
    static TorsionGroup from_invariant_factors(const std::vector<int>& factors);
    static TorsionGroup from_table(std::vector<std::vector<int>> table);

    // Direct product, elements indexed as a * b.order() + b.
    static TorsionGroup direct_product(const TorsionGroup& a, const TorsionGroup& b);

    int order() const noexcept { return order_; }
    bool abelian() const noexcept { return abelian_; }

    // Invariant factors this group was built from; empty for explicit tables
    // (even when the table happens to be abelian).
    const std::vector<int>& invariant_factors() const noexcept { return factors_; }

    int mul(int a, int b) const;
    int inv(int a) const;
    int element_order(int a) const;

    // Number of solutions of f*f = identity, identity included.
    int involution_count() const;

    std::vector<std::vector<int>> table() const;

private:
    TorsionGroup() = default;
    void build_inverses();

    int order_ = 1;
    bool abelian_ = true;
    std::vector<int> factors_;
    std::vector<std::int32_t> table_; // row-major, order_ x order_
    std::vector<std::int32_t> inv_;
};

// The symmetric group on n letters as an explicit table (n! must stay under
// the order cap). Element 0 is the identity permutation; the rest follow
// lexicographic order of the permutation words.
TorsionGroup symmetric_group(int n);

} // namespace abelgrowth
