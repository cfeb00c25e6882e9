#pragma once

#include "abelgrowth/group.hpp"
#include "abelgrowth/numeric.hpp"

#include <optional>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace abelgrowth {

// How a series was obtained. Closed forms and convolutions are exact by
// construction; Bfs means actual ball enumeration.
enum class Provenance {
    Bfs,
    ClosedFormEven,
    ClosedFormOdd,
    ClosedFormMonoid,
    ClosedFormStandard,
    Convolution,
};

std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> provenance_from_string(std::string_view s) noexcept;

// Sphere and ball counts of a group with a fixed generating set, indexed by
// radius 0..max_radius(). sigma(0) = 1 always; beta is the running sum.
class GrowthSeries {
public:
    GrowthSeries(std::vector<Count> sigma, Provenance provenance);

    int max_radius() const noexcept { return static_cast<int>(sigma_.size()) - 1; }
    const std::vector<Count>& sigma() const noexcept { return sigma_; }
    const std::vector<Count>& beta() const noexcept { return beta_; }
    const Count& sigma_at(int r) const;
    const Count& beta_at(int r) const;
    Provenance provenance() const noexcept { return provenance_; }

private:
    std::vector<Count> sigma_;
    std::vector<Count> beta_;
    Provenance provenance_;
};

struct SeriesComparison {
    bool equal = false;
    // Smallest radius where the sigmas differ; -1 when none up to the
    // compared radius.
    int first_disagreement = -1;
    int compared_radius = -1;
};

// Compares sigma values for r = 0..upto. Both series must be computed at
// least that far; agreement of the sigmas is equivalent to agreement of the
// betas since beta is their running sum.
SeriesComparison compare_series(const GrowthSeries& a, const GrowthSeries& b, int upto);

// A fully materialized ball: every element with its word distance. Only kept
// on request since it dwarfs the series itself.
class BallSnapshot {
public:
    BallSnapshot(int radius, std::vector<std::pair<GroupElement, int>> members);

    int radius() const noexcept { return radius_; }

    // Sorted by (distance, element) for reproducible output.
    const std::vector<std::pair<GroupElement, int>>& members() const noexcept { return members_; }

    std::optional<int> distance_of(const GroupElement& g) const;
    bool contains(const GroupElement& g) const { return distance_of(g).has_value(); }

private:
    struct ElementHash {
        std::size_t operator()(const GroupElement& g) const noexcept { return hash_element(g); }
    };

    int radius_;
    std::vector<std::pair<GroupElement, int>> members_;
    std::unordered_map<GroupElement, int, ElementHash> index_;
};

} // namespace abelgrowth
