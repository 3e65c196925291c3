#include "rhombus/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhombus {

BitPattern::Box BitPattern::Box::hull(const Box& a, const Box& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const std::int64_t n0 = std::min(a.n0, b.n0);
    const std::int64_t k0 = std::min(a.k0, b.k0);
    const std::int64_t n1 = std::max(a.n0 + a.rows, b.n0 + b.rows);
    const std::int64_t k1 = std::max(a.k0 + a.cols, b.k0 + b.cols);
    return {n0, k0, n1 - n0, k1 - k0};
}

BitPattern::BitPattern(Box window) : window_(window) {
    if (window.rows < 0 || window.cols < 0) {
        throw std::invalid_argument("pattern window must be non-negative");
    }
    bits_.assign(static_cast<std::size_t>(window.rows * window.cols), 0);
}

bool BitPattern::value(Cell c) const {
    if (!window_.contains(c)) return false;
    return bits_[static_cast<std::size_t>((c.n - window_.n0) * window_.cols +
                                          (c.k - window_.k0))] != 0;
}

void BitPattern::set(Cell c, bool v) {
    if (!window_.contains(c)) throw std::out_of_range("cell outside the pattern window");
    bits_[static_cast<std::size_t>((c.n - window_.n0) * window_.cols + (c.k - window_.k0))] =
        v ? 1 : 0;
}

std::uint64_t BitPattern::ones() const {
    std::uint64_t c = 0;
    for (std::uint8_t b : bits_) c += b;
    return c;
}

std::vector<Cell> BitPattern::one_cells() const {
    std::vector<Cell> cells;
    for (std::int64_t n = window_.n0; n < window_.n0 + window_.rows; ++n) {
        for (std::int64_t k = window_.k0; k < window_.k0 + window_.cols; ++k) {
            if (value({n, k})) cells.push_back({n, k});
        }
    }
    return cells;
}

bool operator==(const BitPattern& a, const BitPattern& b) {
    const auto box = BitPattern::Box::hull(a.window_, b.window_);
    for (std::int64_t n = box.n0; n < box.n0 + box.rows; ++n) {
        for (std::int64_t k = box.k0; k < box.k0 + box.cols; ++k) {
            if (a.value({n, k}) != b.value({n, k})) return false;
        }
    }
    return true;
}

BitPattern transform(const BitPattern& p, const Placement& placement) {
    const auto& w = p.window();
    if (w.empty()) return p;
    const Cell c1 = placement.apply({w.n0, w.k0});
    const Cell c2 = placement.apply({w.n0 + w.rows - 1, w.k0 + w.cols - 1});
    BitPattern::Box box{std::min(c1.n, c2.n), std::min(c1.k, c2.k),
                        std::max(c1.n, c2.n) - std::min(c1.n, c2.n) + 1,
                        std::max(c1.k, c2.k) - std::min(c1.k, c2.k) + 1};
    BitPattern out(box);
    for (std::int64_t n = w.n0; n < w.n0 + w.rows; ++n) {
        for (std::int64_t k = w.k0; k < w.k0 + w.cols; ++k) {
            if (p.value({n, k})) out.set(placement.apply({n, k}), true);
        }
    }
    return out;
}

}  // namespace rhombus
