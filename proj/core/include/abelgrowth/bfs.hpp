#pragma once

#include "abelgrowth/budget.hpp"
#include "abelgrowth/generating_set.hpp"
#include "abelgrowth/group.hpp"
#include "abelgrowth/growth_series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace abelgrowth {

struct BfsOptions {
    int max_radius = 0;
    bool keep_ball = false;
    ResourceBudget budget{};
};

struct BfsResult {
    GrowthSeries series;
    std::optional<BallSnapshot> ball;
};

// Enumerates balls around the identity layer by layer, multiplying frontier
// elements by the generators on the right. Deterministic: the series and any
// retained snapshot depend only on the group, the set of generators and the
// radius. Throws ResourceError when the budget is exceeded, carrying the last
// completed radius.
BfsResult bfs_growth(const GeneratingSet& set, const BfsOptions& options);

// Same engine on a raw element list, skipping generating-set validation.
// Useful for balls of sets that are not generating (projections, candidate
// sets under test, deliberately defective inputs).
BfsResult bfs_growth_elements(const GroupSpec& spec, std::span<const GroupElement> elements,
                              const BfsOptions& options);

// Directed word distances from the identity to each target, searched by one
// shared BFS that stops as soon as every target is found or the ball stops
// growing or radius_cap is reached. nullopt = not reachable within the cap.
std::vector<std::optional<int>> word_distances(const GroupSpec& spec,
                                               std::span<const GroupElement> elements,
                                               std::span<const GroupElement> targets,
                                               int radius_cap,
                                               const ResourceBudget& budget = {});

std::optional<int> word_distance(const GroupSpec& spec, const GeneratingSet& set,
                                 const GroupElement& g, int radius_cap,
                                 const ResourceBudget& budget = {});

// Word distances of the purely torsion elements (0, f). full is the max over
// all f, involutions the max over elements of order at most 2. Throws
// GenerationError if some torsion element is unreachable within radius_cap.
struct TorsionDiameter {
    int full = 0;
    int involutions = 0;
    std::vector<int> distances; // indexed by torsion element
};

TorsionDiameter torsion_diameter(const GeneratingSet& set, int radius_cap = 0,
                                 const ResourceBudget& budget = {});

// Smallest C with d_T(s) <= C for all s in S and d_S(t) <= C for all t in T,
// so that balls satisfy B_S(r) within B_T(C r) and vice versa. Both sets must
// generate the same group.
int change_constant(const GeneratingSet& s, const GeneratingSet& t,
                    const ResourceBudget& budget = {});

} // namespace abelgrowth
