#pragma once

#include <cstdint>
#include <vector>

#include "rhombus/cell.hpp"
#include "rhombus/placement.hpp"

namespace rhombus {

// Finite 0/1 window over the cell lattice. Cells absent from the window
// read as 0, so two patterns are equal when they agree as functions on
// the whole lattice regardless of window extents.
class BitPattern {
public:
    struct Box {
        std::int64_t n0 = 0, k0 = 0;    // top-left cell
        std::int64_t rows = 0, cols = 0;

        bool contains(Cell c) const {
            return c.n >= n0 && c.n < n0 + rows && c.k >= k0 && c.k < k0 + cols;
        }
        bool empty() const { return rows <= 0 || cols <= 0; }
        static Box hull(const Box& a, const Box& b);

        friend bool operator==(const Box&, const Box&) = default;
    };

    BitPattern() = default;
    explicit BitPattern(Box window);

    const Box& window() const { return window_; }

    bool value(Cell c) const;
    // c must lie inside the window.
    void set(Cell c, bool v);

    std::uint64_t ones() const;
    std::vector<Cell> one_cells() const;  // row-major order

    // Equality as functions on the lattice (absent cells read as 0).
    friend bool operator==(const BitPattern& a, const BitPattern& b);

private:
    Box window_{};
    std::vector<std::uint8_t> bits_;
};

// Rigidly transformed copy; the window is the image's bounding box.
BitPattern transform(const BitPattern& p, const Placement& placement);

}  // namespace rhombus
