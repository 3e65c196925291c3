#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rhombus/grid.hpp"

namespace rhombus {

// Diagonal D_k: the cells (n, -n+k+1). D_0 is the left edge, all ones.
struct DiagonalSequence {
    std::int64_t k = 0;
    std::int64_t start_row = 0;
    std::vector<std::uint8_t> bits;
};

// First row whose D_k cell lies strictly inside the nonzero wedge.
std::int64_t diagonal_start_row(std::int64_t k);

// Bits at (n, -n+k+1) for n = start_row .. start_row+length-1. Throws
// std::out_of_range when the grid is too short.
DiagonalSequence diagonal_bits(const RowGrid& grid, std::int64_t k, std::int64_t length);

// Smallest p >= 1 with bits[i] == bits[i+p] for all valid i in the
// observed window. Throws std::invalid_argument on an empty sequence.
std::int64_t minimal_period(std::span<const std::uint8_t> bits);

}  // namespace rhombus
