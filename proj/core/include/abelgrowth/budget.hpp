#pragma once

#include <cstdint>

namespace abelgrowth {

// Hard limits for anything that enumerates group elements. The memory cap
// covers the dominant allocations (visited sets, frontiers, retained balls);
// exceeding it raises ResourceError instead of thrashing. coord_bits bounds
// the magnitude of lattice coordinates the search may produce.
struct ResourceBudget {
    std::uint64_t mem_cap_bytes = std::uint64_t{2} << 30;
    int coord_bits = 63;

    std::int64_t coord_limit() const noexcept {
        if (coord_bits >= 63) return INT64_MAX;
        return (std::int64_t{1} << coord_bits) - 1;
    }
};

} // namespace abelgrowth
