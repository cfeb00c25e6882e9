#include "abelgrowth/growth_series.hpp"

#include "abelgrowth/errors.hpp"

#include <algorithm>
#include <string>

namespace abelgrowth {

std::string_view to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::Bfs: return "bfs";
        case Provenance::ClosedFormEven: return "closed-form-even";
        case Provenance::ClosedFormOdd: return "closed-form-odd";
        case Provenance::ClosedFormMonoid: return "closed-form-monoid";
        case Provenance::ClosedFormStandard: return "closed-form-standard";
        case Provenance::Convolution: return "convolution";
    }
    return "unknown";
}

std::optional<Provenance> provenance_from_string(std::string_view s) noexcept {
    for (Provenance p : {Provenance::Bfs, Provenance::ClosedFormEven, Provenance::ClosedFormOdd,
                         Provenance::ClosedFormMonoid, Provenance::ClosedFormStandard,
                         Provenance::Convolution}) {
        if (to_string(p) == s) return p;
    }
    return std::nullopt;
}

GrowthSeries::GrowthSeries(std::vector<Count> sigma, Provenance provenance)
    : sigma_(std::move(sigma)), provenance_(provenance) {
    if (sigma_.empty() || sigma_[0] != 1) {
        throw ValidationError("growth series must start with sigma(0) = 1");
    }
    beta_.reserve(sigma_.size());
    Count running = 0;
    for (const Count& s : sigma_) {
        if (s < 0) throw ValidationError("negative sphere count");
        running += s;
        beta_.push_back(running);
    }
}

const Count& GrowthSeries::sigma_at(int r) const {
    if (r < 0 || r > max_radius()) {
        throw ValidationError("radius " + std::to_string(r) + " outside computed range 0.." +
                              std::to_string(max_radius()));
    }
    return sigma_[static_cast<std::size_t>(r)];
}

const Count& GrowthSeries::beta_at(int r) const {
    if (r < 0 || r > max_radius()) {
        throw ValidationError("radius " + std::to_string(r) + " outside computed range 0.." +
                              std::to_string(max_radius()));
    }
    return beta_[static_cast<std::size_t>(r)];
}

SeriesComparison compare_series(const GrowthSeries& a, const GrowthSeries& b, int upto) {
    if (upto < 0) throw ValidationError("comparison radius must be nonnegative");
    if (upto > a.max_radius() || upto > b.max_radius()) {
        throw ValidationError("comparison radius " + std::to_string(upto) +
                              " beyond a series computed to " +
                              std::to_string(std::min(a.max_radius(), b.max_radius())));
    }
    SeriesComparison cmp;
    cmp.compared_radius = upto;
    cmp.equal = true;
    for (int r = 0; r <= cmp.compared_radius; ++r) {
        if (a.sigma_at(r) != b.sigma_at(r)) {
            cmp.equal = false;
            cmp.first_disagreement = r;
            break;
        }
    }
    return cmp;
}

BallSnapshot::BallSnapshot(int radius, std::vector<std::pair<GroupElement, int>> members)
    : radius_(radius), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    index_.reserve(members_.size());
    for (const auto& [g, d] : members_) index_.emplace(g, d);
}

std::optional<int> BallSnapshot::distance_of(const GroupElement& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

} // namespace abelgrowth
