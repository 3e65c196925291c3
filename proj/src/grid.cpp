#include "rhombus/grid.hpp"

#include <ostream>
#include <stdexcept>

namespace rhombus {

std::ostream& operator<<(std::ostream& os, const Cell& c) {
    return os << '(' << c.n << ',' << c.k << ')';
}

const BitRow& RowGrid::row(std::int64_t n) const {
    if (n < 0 || n > row_count()) throw std::out_of_range("row index outside generated grid");
    return rows_[static_cast<std::size_t>(n)];
}

bool RowGrid::value(Cell c) const {
    return row(c.n).bit(c.k);
}

std::uint64_t RowGrid::row_ones(std::int64_t m) const {
    if (m < 1 || m > row_count()) throw std::out_of_range("row index outside generated grid");
    return rows_[static_cast<std::size_t>(m)].popcount();
}

RowGrid::OnesCount RowGrid::cumulative_ones(std::int64_t m) const {
    if (m < 1 || m > row_count()) throw std::out_of_range("row index outside generated grid");
    OnesCount c;
    for (std::int64_t n = 1; n <= m; ++n) {
        c.ones += rows_[static_cast<std::size_t>(n)].popcount();
    }
    c.zeros = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m) - c.ones;
    return c;
}

RowGrid generate(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("row count must be >= 0");
    RowGrid g;
    g.rows_.reserve(static_cast<std::size_t>(m) + 1);
    g.rows_.emplace_back();  // row 0, empty
    if (m >= 1) g.rows_.push_back(BitRow::initial());
    for (std::int64_t n = 2; n <= m; ++n) {
        g.rows_.push_back(next_row(g.rows_[static_cast<std::size_t>(n - 1)],
                                   g.rows_[static_cast<std::size_t>(n - 2)]));
    }
    return g;
}

const std::vector<BigInt>& IntRowGrid::row(std::int64_t n) const {
    if (n < 0 || n > row_count()) throw std::out_of_range("row index outside generated grid");
    return rows_[static_cast<std::size_t>(n)];
}

BigInt IntRowGrid::value(Cell c) const {
    const auto& r = row(c.n);
    const std::int64_t j = c.k + c.n - 1;
    if (j < 0 || j >= static_cast<std::int64_t>(r.size())) return 0;
    return r[static_cast<std::size_t>(j)];
}

IntRowGrid generate_integer(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("row count must be >= 0");
    IntRowGrid g;
    g.rows_.reserve(static_cast<std::size_t>(m) + 1);
    g.rows_.emplace_back();
    if (m >= 1) g.rows_.push_back({BigInt(1)});
    for (std::int64_t n = 2; n <= m; ++n) {
        std::vector<BigInt> row(static_cast<std::size_t>(2 * n - 1));
        for (std::int64_t k = -(n - 1); k <= n - 1; ++k) {
            row[static_cast<std::size_t>(k + n - 1)] =
                g.value({n - 1, k - 1}) + g.value({n - 1, k}) + g.value({n - 1, k + 1}) +
                g.value({n - 2, k});
        }
        g.rows_.push_back(std::move(row));
    }
    return g;
}

}  // namespace rhombus
