#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rhombus/grid.hpp"
#include "rhombus/pattern.hpp"
#include "rhombus/placement.hpp"

namespace rhombus {

// Rows a standard-position configuration of the given order occupies:
// the region's last interior row is one above the tail corner.
std::int64_t stealth_row_extent(int order);  // 3 * 2^(order-1) for order >= 1

// The eight octagon vertices in standard position, clockwise from the
// top: (0,0), (2^n,-2^n), (2^n+2^(n-1),-2^(n-1)), (2^n+2^(n-2),-2^(n-2)),
// (2^n+2^(n-1),0), (2^n+2^(n-2),2^(n-2)), (2^n+2^(n-1),2^(n-1)), (2^n,2^n).
// Throws std::domain_error for order < 2 (orders 0 and 1 are explicit
// cell lists, not octagons).
std::array<Cell, 8> octagon_vertices(int order);

// Strict-interior membership in standard position. All octagon edges
// have slope +-1, so the test reduces to integer inequalities on the
// diagonal coordinates u = n+k and v = n-k. Orders 0 and 1 use their
// explicit cell lists.
bool region_contains(int order, Cell local);

// Membership under a placement.
bool contains(int order, const Placement& placement, Cell c);

// Tight bounding box of the standard-position region.
BitPattern::Box region_window(int order);

struct StealthRegion {
    int order = 0;
    Placement placement;
    std::vector<Cell> cells;  // transformed, row-major in local coordinates
};

// Enumerates all member cells; |cells| = D_order.
StealthRegion region_cells(int order, const Placement& placement);

enum class ChildRole { nose, left_wing, right_wing, body, tail };
const char* to_string(ChildRole r);

struct ChildPlacement {
    ChildRole role;
    int order;
    Placement placement;
};

// Five-way decomposition: nose and wings of order n-1, body and tail of
// order n-2, placements composed with the parent placement. Throws
// std::domain_error for order < 2.
std::array<ChildPlacement, 5> decompose(int order, const Placement& placement);

// The six acute corners of the bounding octagon, the exceptional cells
// of the order-n configuration for n >= 1:
// (0,0), (2^n,-2^n), (2^n+2^(n-1),-2^(n-1)), (2^n+2^(n-1),0),
// (2^n+2^(n-1),2^(n-1)), (2^n,2^n).
std::array<Cell, 6> corner_cells(int order);

// Centers of 5-cell rhombi covering an odd number of ones with respect
// to p; cells outside p read as 0. Sorted by (n,k).
std::vector<Cell> exceptional_cells(const BitPattern& p);

// Grid values restricted to the standard-position region. The grid must
// cover stealth_row_extent(order) rows.
BitPattern build_stealth(const RowGrid& grid, int order);
BitPattern build_stealth(int order);

// Recursive cut-and-paste assembly from lower-order copies at the
// decomposition placements; uncovered region cells stay 0.
BitPattern build_pseudo_stealth(int order);

// Sloane's diamond H_n: the first 2^n rows of the rhombus (mod 2)
// together with their reflection in row 2^n. The grid must cover 2^n
// rows. H_0 is the single seed cell.
BitPattern haystack(const RowGrid& grid, int n);
BitPattern haystack(int n);

// H_n as four order n-1 configurations, one in each corner facing out,
// around a centered copy of H_{n-2}. Requires n >= 2.
struct HaystackDecomposition {
    int corner_order;
    std::array<Placement, 4> corners;  // top, left, right, bottom
    int center_order;                  // n - 2
    Cell center_offset;                // translation applied to H_{n-2}
};
HaystackDecomposition haystack_decomposition(int n);

}  // namespace rhombus
