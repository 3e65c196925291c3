#pragma once

#include <cstdint>
#include <vector>

#include "rhombus/bigint.hpp"
#include "rhombus/bitrow.hpp"
#include "rhombus/cell.hpp"

namespace rhombus {

// The Pascal rhombus (mod 2), rows 0..m. Immutable once generated and
// safe for concurrent read-only access.
class RowGrid {
public:
    // Number of the last generated row.
    std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()) - 1; }

    // Throws std::out_of_range when n is not in 0..row_count().
    const BitRow& row(std::int64_t n) const;

    // Stored bit at c; 0 for |k| >= n. Throws std::out_of_range when
    // c.n is outside the generated rows.
    bool value(Cell c) const;

    // Population count of row m, 1 <= m <= row_count().
    std::uint64_t row_ones(std::int64_t m) const;

    struct OnesCount {
        std::uint64_t ones = 0;   // G_m: ones in rows 1..m
        std::uint64_t zeros = 0;  // H_m = m^2 - G_m
    };
    // Counts over rows 1..m (the first m rows hold m^2 cells).
    OnesCount cumulative_ones(std::int64_t m) const;

private:
    std::vector<BitRow> rows_;
    friend RowGrid generate(std::int64_t m);
};

// Rows 0..m via the rhombus rule from the single seed cell (1,0).
// m = 0 yields a grid holding only the empty row 0.
RowGrid generate(std::int64_t m);

// Exact integer rhombus with the same indexing. Intended for small m.
class IntRowGrid {
public:
    std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
    const std::vector<BigInt>& row(std::int64_t n) const;
    BigInt value(Cell c) const;

private:
    std::vector<std::vector<BigInt>> rows_;  // row n holds k = -(n-1)..n-1
    friend IntRowGrid generate_integer(std::int64_t m);
};

IntRowGrid generate_integer(std::int64_t m);

}  // namespace rhombus
