#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace rhombus {

// Lattice coordinate: row n (growing downward), column k (0 at the center).
// Nonzero grid entries satisfy -n < k < n.
struct Cell {
    std::int64_t n = 0;
    std::int64_t k = 0;

    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

constexpr Cell operator+(Cell a, Cell b) { return {a.n + b.n, a.k + b.k}; }
constexpr Cell operator-(Cell a, Cell b) { return {a.n - b.n, a.k - b.k}; }

std::ostream& operator<<(std::ostream& os, const Cell& c);

}  // namespace rhombus
