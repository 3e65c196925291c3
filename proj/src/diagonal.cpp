#include "rhombus/diagonal.hpp"

#include <stdexcept>

namespace rhombus {

std::int64_t diagonal_start_row(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("diagonal index must be >= 0");
    // Strict wedge membership of (n, -n+k+1) requires n > (k+1)/2.
    return (k + 1) / 2 + 1;
}

DiagonalSequence diagonal_bits(const RowGrid& grid, std::int64_t k, std::int64_t length) {
    if (length < 0) throw std::invalid_argument("length must be >= 0");
    DiagonalSequence d{k, diagonal_start_row(k), {}};
    if (length > 0 && grid.row_count() < d.start_row + length - 1) {
        throw std::out_of_range("grid too short for the requested diagonal window");
    }
    d.bits.reserve(static_cast<std::size_t>(length));
    for (std::int64_t n = d.start_row; n < d.start_row + length; ++n) {
        d.bits.push_back(grid.value({n, -n + k + 1}) ? 1 : 0);
    }
    return d;
}

std::int64_t minimal_period(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw std::invalid_argument("period of an empty sequence");
    // KMP border: the minimal period of a window is its length minus the
    // longest proper border.
    const std::size_t L = bits.size();
    std::vector<std::size_t> border(L + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < L; ++i) {
        while (b > 0 && bits[i] != bits[b]) b = border[b];
        if (bits[i] == bits[b]) ++b;
        border[i + 1] = b;
    }
    return static_cast<std::int64_t>(L - border[L]);
}

}  // namespace rhombus
