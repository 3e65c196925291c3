#include "rhombus/bitrow.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace rhombus {

namespace {

std::size_t words_for(std::int64_t width) {
    return static_cast<std::size_t>((width + 63) / 64);
}

// dst[j + shift] ^= src[j] for every bit offset j. Word shifts are never
// needed here (shift <= 2). Unused high bits of src are zero, so the
// carry never spills past dst's last word.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 unsigned shift) {
    assert(shift < 64);
    if (src.empty()) return;
    if (shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i] ^= src[i] << shift;
        if (std::uint64_t carry = src[i] >> (64 - shift)) {
            assert(i + 1 < dst.size());
            dst[i + 1] ^= carry;
        }
    }
}

}  // namespace

BitRow::BitRow(std::int64_t n) : n_(n) {
    if (n < 0) throw std::invalid_argument("row index must be >= 0");
    if (n > 0) words_.assign(words_for(2 * n - 1), 0);
}

BitRow BitRow::initial() {
    BitRow r(1);
    r.words_[0] = 1;
    return r;
}

bool BitRow::bit(std::int64_t k) const {
    const std::int64_t j = k + n_ - 1;
    if (j < 0 || j >= width()) return false;
    return (words_[static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1;
}

void BitRow::set_bit(std::int64_t k, bool v) {
    const std::int64_t j = k + n_ - 1;
    if (j < 0 || j >= width()) throw std::out_of_range("column outside the row window");
    const std::uint64_t mask = std::uint64_t{1} << (j & 63);
    auto& w = words_[static_cast<std::size_t>(j >> 6)];
    w = v ? (w | mask) : (w & ~mask);
}

std::uint64_t BitRow::popcount() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

bool BitRow::is_palindrome() const {
    for (std::int64_t k = 1; k < n_; ++k) {
        if (bit(k) != bit(-k)) return false;
    }
    return true;
}

BitRow next_row(const BitRow& prev, const BitRow& prev2) {
    if (prev.index() < 1) throw std::invalid_argument("prev must be row 1 or later");
    if (prev2.index() != prev.index() - 1) {
        throw std::invalid_argument("row indices must be consecutive (prev2.n != prev.n - 1)");
    }
    const std::int64_t n = prev.index() + 1;
    BitRow out(n);
    // In offsets of the width-(2n-1) output window:
    //   out[j] = prev[j-2] ^ prev[j-1] ^ prev[j] ^ prev2[j-2]
    xor_shifted(out.words_, prev.words_, 0);
    xor_shifted(out.words_, prev.words_, 1);
    xor_shifted(out.words_, prev.words_, 2);
    xor_shifted(out.words_, prev2.words_, 2);
    return out;
}

}  // namespace rhombus
