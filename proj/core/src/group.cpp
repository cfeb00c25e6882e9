#include "abelgrowth/group.hpp"

#include "abelgrowth/errors.hpp"

#include <string>
#include <utility>

namespace abelgrowth {

std::size_t hash_element(const GroupElement& g) noexcept {
    // FNV-1a over the coordinate words and the torsion index.
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (std::int64_t c : g.vec) mix(static_cast<std::uint64_t>(c));
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(g.tor)));
    return static_cast<std::size_t>(h);
}

GroupSpec::GroupSpec(int rank, TorsionGroup torsion)
    : rank_(rank), torsion_(std::make_shared<const TorsionGroup>(std::move(torsion))) {
    if (rank < 0) throw ValidationError("rank must be nonnegative");
}

GroupElement GroupSpec::identity() const {
    return GroupElement{std::vector<std::int64_t>(rank_, 0), 0};
}

GroupElement GroupSpec::mul(const GroupElement& a, const GroupElement& b) const {
    require_conforms(a);
    require_conforms(b);
    GroupElement r;
    r.vec.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (__builtin_add_overflow(a.vec[i], b.vec[i], &r.vec[i])) {
            throw ResourceError("coordinate overflow in multiplication");
        }
    }
    r.tor = torsion_->mul(a.tor, b.tor);
    return r;
}

GroupElement GroupSpec::inv(const GroupElement& a) const {
    require_conforms(a);
    GroupElement r;
    r.vec.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (a.vec[i] == INT64_MIN) throw ResourceError("coordinate overflow in inverse");
        r.vec[i] = -a.vec[i];
    }
    r.tor = torsion_->inv(a.tor);
    return r;
}

bool GroupSpec::conforms(const GroupElement& g) const noexcept {
    return static_cast<int>(g.vec.size()) == rank_ && g.tor >= 0 && g.tor < torsion_->order();
}

void GroupSpec::require_conforms(const GroupElement& g) const {
    if (static_cast<int>(g.vec.size()) != rank_) {
        throw ValidationError("element has " + std::to_string(g.vec.size()) +
                              " coordinates, group has rank " + std::to_string(rank_));
    }
    if (g.tor < 0 || g.tor >= torsion_->order()) {
        throw ValidationError("torsion index " + std::to_string(g.tor) +
                              " out of range for order " + std::to_string(torsion_->order()));
    }
}

int GroupSpec::order_le2_census() const {
    // (v, f)^2 = (2v, f^2) is the identity iff v = 0 and f^2 = e, so the
    // census does not depend on the rank.
    return torsion_->involution_count();
}

bool GroupSpec::same_group(const GroupSpec& other) const {
    if (rank_ != other.rank_) return false;
    if (torsion_ == other.torsion_) return true;
    if (torsion_->order() != other.torsion_->order()) return false;
    return torsion_->table() == other.torsion_->table();
}

GroupSpec product_group(const GroupSpec& a, const GroupSpec& b) {
    return GroupSpec(a.rank() + b.rank(),
                     TorsionGroup::direct_product(a.torsion(), b.torsion()));
}

GroupElement product_element(const GroupSpec& a, const GroupSpec& b,
                             const GroupElement& ga, const GroupElement& gb) {
    a.require_conforms(ga);
    b.require_conforms(gb);
    GroupElement r;
    r.vec = ga.vec;
    r.vec.insert(r.vec.end(), gb.vec.begin(), gb.vec.end());
    r.tor = ga.tor * b.torsion().order() + gb.tor;
    return r;
}

} // namespace abelgrowth
