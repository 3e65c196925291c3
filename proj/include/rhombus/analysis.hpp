#pragma once

#include <cstdint>
#include <vector>

#include "rhombus/bigint.hpp"
#include "rhombus/grid.hpp"
#include "rhombus/report.hpp"

namespace rhombus {

// Ones in the central column from (1,0) down to (2^n + 2^(n-1), 0);
// equals A_n = 2^n. Throws std::out_of_range when the grid is short.
std::uint64_t spine_ones(const RowGrid& grid, int n);

// Rows each check reads, so callers can generate exactly enough.
std::int64_t rows_needed_conjecture1(int n);  // 2^(n+1), fourth triangle included
std::int64_t rows_needed_conjecture2(int n);  // 2^n
std::int64_t rows_needed_conjecture3(std::int64_t k, std::int64_t horizon);
std::int64_t rows_needed_mirror(int n);       // 2^n + 2^(n-1)

// The top triangle of 2^(n-1) rows equals, cell for cell under
// translation, the triangles rooted at (2^n+1, -2^n), (2^n+1, 2^n) and
// (2^n+2^(n-1)+1, 0).
VerificationReport verify_conjecture1(const RowGrid& grid, int n);

// row_ones(2^n) == (2^(n+2) - (-1)^n)/3, cross-checked against the
// wingtip-row count B_n.
VerificationReport verify_conjecture2(const RowGrid& grid, int n);

// Observed minimal period of D_k divides 2^(floor(log2 k)+1) (which
// implies the conjectured 2^(ceil(log2 k)+1)), and the restriction of
// D_k to each reachable standard configuration S_(m+i), order <= 8, is
// a palindrome. Horizons shorter than two claimed periods are
// inconclusive.
VerificationReport verify_conjecture3(const RowGrid& grid, std::int64_t k,
                                      std::int64_t horizon);

// G_m / m^2 stays below the envelope E_(floor(log2 m)+1) / 4^floor(log2 m)
// for every m <= max_rows.
VerificationReport verify_conjecture4(const RowGrid& grid, std::int64_t max_rows);

// The upper rhombus reflects onto the left rhombus across the line
// n - k = 2^n: grid(a,b) == grid(b + 2^n, a - 2^n) strictly inside.
VerificationReport verify_mirror(const RowGrid& grid, int n);

// Cut-and-paste equivalence: build_pseudo_stealth(order) equals
// build_stealth(order) cell for cell, region cells uncovered by the
// five children are zero, and ones counts satisfy C_n = 3C_(n-1) + 2C_(n-2).
VerificationReport verify_theorem1(int order);

// Exceptional cells are exactly the six acute corners, and (order >= 3)
// the 30 transformed child corners cancel pairwise down to the parent
// six.
VerificationReport verify_lemma1(int order);

struct DensityRow {
    int n = 0;
    BigInt region_ones, region_cells;    // C_n, D_n
    BigInt prefix_ones, prefix_cells;    // E_n, F_n = 4^n
    double region_density = 0.0;         // C_n / D_n
    double prefix_density = 0.0;         // E_n / 4^n
    double growth_ratio = 0.0;           // C_n / C_(n-1), 0 for n = 0
};

// Exact ratio table plus monotone-decrease and growth-rate diagnostics.
std::vector<DensityRow> density_report(int max_n);

}  // namespace rhombus
