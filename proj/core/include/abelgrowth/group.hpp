#pragma once

#include "abelgrowth/torsion_group.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace abelgrowth {

// Element of Z^d x F: a lattice vector and the index of a torsion element.
// Coordinates are 63-bit signed; arithmetic that would overflow throws.
struct GroupElement {
    std::vector<std::int64_t> vec;
    std::int32_t tor = 0;

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

std::size_t hash_element(const GroupElement& g) noexcept;

// The ambient group Z^rank x F. Cheap to copy; the torsion table is shared.
class GroupSpec {
public:
    GroupSpec(int rank, TorsionGroup torsion);

    int rank() const noexcept { return rank_; }
    const TorsionGroup& torsion() const noexcept { return *torsion_; }
    std::shared_ptr<const TorsionGroup> torsion_ptr() const noexcept { return torsion_; }

    GroupElement identity() const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;

    bool conforms(const GroupElement& g) const noexcept;
    void require_conforms(const GroupElement& g) const;

    // Number of group elements with g*g = identity. All of them live in the
    // torsion part as soon as any lattice coordinate is nonzero.
    int order_le2_census() const;

    // Same rank and identical torsion table.
    bool same_group(const GroupSpec& other) const;

private:
    int rank_;
    std::shared_ptr<const TorsionGroup> torsion_;
};

GroupSpec product_group(const GroupSpec& a, const GroupSpec& b);

// Element of a product group: concatenated lattice parts, paired torsion
// indexed as in TorsionGroup::direct_product.
GroupElement product_element(const GroupSpec& a, const GroupSpec& b,
                             const GroupElement& ga, const GroupElement& gb);

} // namespace abelgrowth
