#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rhombus {

// One row of the Pascal rhombus (mod 2), packed 64 cells per word.
// Row n covers columns -(n-1) .. n-1 (width 2n-1); bit offset j = k + n - 1.
// Row 0 is the empty row. Unused high bits of the last word are kept zero.
class BitRow {
public:
    BitRow() = default;              // row 0
    explicit BitRow(std::int64_t n); // all-zero row of width 2n-1

    // Row 1, the single seed cell at k = 0.
    static BitRow initial();

    std::int64_t index() const { return n_; }
    std::int64_t width() const { return n_ == 0 ? 0 : 2 * n_ - 1; }

    // Value at column k; 0 outside the window.
    bool bit(std::int64_t k) const;
    void set_bit(std::int64_t k, bool v);

    std::uint64_t popcount() const;
    bool is_palindrome() const;

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitRow&, const BitRow&) = default;

private:
    std::int64_t n_ = 0;
    std::vector<std::uint64_t> words_;

    friend BitRow next_row(const BitRow& prev, const BitRow& prev2);
};

// Rhombus rule mod 2. Produces row n = prev.index()+1 of width 2n-1:
// three one-cell-shifted copies of prev XORed together, plus prev2
// centered in the widened window. Throws std::invalid_argument when
// the row indices are not consecutive.
BitRow next_row(const BitRow& prev, const BitRow& prev2);

}  // namespace rhombus
