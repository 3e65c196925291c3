#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhombus/bigint.hpp"

namespace rhombus {

// Counting sequences of the rhombus and its stealth configurations.
//   A: spine ones, 2^n              B: wingtip-row ones, (2^(n+2)-(-1)^n)/3
//   C: region ones, 3C'+2C''        D: region cells, (13/8)4^n - 2*2^n + 1
//   E: ones in first 2^n rows       F: cells in first 2^n rows, 4^n
//   I: ones in row 2^n (= B)        G/H: ones/zeros in the first m rows
enum class SeqName { A, B, C, D, E, F, I, G, H };

const char* to_string(SeqName name);
std::optional<SeqName> seq_from_string(const std::string& s);

struct SequenceTable {
    SeqName name;
    int first_index = 0;
    std::vector<BigInt> values;

    const BigInt& at(int n) const;  // by sequence index, not vector position
    int last_index() const { return first_index + static_cast<int>(values.size()) - 1; }
};

// Canonical channel: the integer recurrences. G and H are grid-derived
// (indexed from row 1); all others are indexed from 0.
SequenceTable sequence(SeqName name, int max_n);

// Exact closed forms where one exists (A, B, D, F, I).
std::optional<BigInt> closed_form_exact(SeqName name, int n);

// Floating-point evaluation of the closed forms, including the sqrt(17)
// expressions for C and E; agrees with the integer channel to relative
// 1e-9 for n <= 30.
double closed_form_real(SeqName name, int n);

// Dominant root of x^2 = 3x + 2, the growth rate of C and E.
double growth_root();

}  // namespace rhombus
