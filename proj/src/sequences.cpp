#include "rhombus/sequences.hpp"

#include <cmath>
#include <stdexcept>

#include "rhombus/grid.hpp"

namespace rhombus {

const char* to_string(SeqName name) {
    switch (name) {
        case SeqName::A: return "A";
        case SeqName::B: return "B";
        case SeqName::C: return "C";
        case SeqName::D: return "D";
        case SeqName::E: return "E";
        case SeqName::F: return "F";
        case SeqName::I: return "I";
        case SeqName::G: return "G";
        case SeqName::H: return "H";
    }
    throw std::invalid_argument("unknown sequence name");
}

std::optional<SeqName> seq_from_string(const std::string& s) {
    if (s.size() != 1) return std::nullopt;
    switch (s[0]) {
        case 'A': return SeqName::A;
        case 'B': return SeqName::B;
        case 'C': return SeqName::C;
        case 'D': return SeqName::D;
        case 'E': return SeqName::E;
        case 'F': return SeqName::F;
        case 'I': return SeqName::I;
        case 'G': return SeqName::G;
        case 'H': return SeqName::H;
        default: return std::nullopt;
    }
}

const BigInt& SequenceTable::at(int n) const {
    const int i = n - first_index;
    if (i < 0 || i >= static_cast<int>(values.size())) {
        throw std::out_of_range("sequence index outside the computed table");
    }
    return values[static_cast<std::size_t>(i)];
}

namespace {

std::vector<BigInt> recur2(int max_n, BigInt v0, BigInt v1, int c1, int c2) {
    std::vector<BigInt> v{std::move(v0)};
    if (max_n >= 1) v.push_back(std::move(v1));
    for (int n = 2; n <= max_n; ++n) {
        v.push_back(c1 * v[static_cast<std::size_t>(n - 1)] +
                    c2 * v[static_cast<std::size_t>(n - 2)]);
    }
    v.resize(static_cast<std::size_t>(max_n) + 1);
    return v;
}

}  // namespace

SequenceTable sequence(SeqName name, int max_n) {
    if (max_n < 0) throw std::invalid_argument("sequence length must be >= 0");
    SequenceTable t{name, 0, {}};
    switch (name) {
        case SeqName::A:  // A_n = A_(n-1) + 2A_(n-2), A_0 = 1, A_1 = 2
            t.values = recur2(max_n, 1, 2, 1, 2);
            break;
        case SeqName::I:
        case SeqName::B: {  // B_n = 2A_(n-1) + B_(n-2), B_0 = 1, B_1 = 3
            t.values = {BigInt(1)};
            if (max_n >= 1) t.values.push_back(3);
            for (int n = 2; n <= max_n; ++n) {
                t.values.push_back(pow2(n) + t.values[static_cast<std::size_t>(n - 2)]);
            }
            break;
        }
        case SeqName::C:  // C_n = 3C_(n-1) + 2C_(n-2), C_0 = 1, C_1 = 4
            t.values = recur2(max_n, 1, 4, 3, 2);
            break;
        case SeqName::D: {  // (2^n)^2 + (2^n-1)^2 - (2^(n-1))^2 - 2(2^(n-2))^2 for n >= 2
            t.values = {BigInt(1)};
            if (max_n >= 1) t.values.push_back(4);
            for (int n = 2; n <= max_n; ++n) {
                const BigInt p = pow2(n);
                t.values.push_back(p * p + (p - 1) * (p - 1) - pow2(n - 1) * pow2(n - 1) -
                                   2 * pow2(n - 2) * pow2(n - 2));
            }
            break;
        }
        case SeqName::E: {  // E_n = 2C_(n-1) + E_(n-2) + A_(n-1), E_0 = 1, E_1 = 4
            const auto c = sequence(SeqName::C, std::max(0, max_n - 1));
            t.values = {BigInt(1)};
            if (max_n >= 1) t.values.push_back(4);
            for (int n = 2; n <= max_n; ++n) {
                t.values.push_back(2 * c.at(n - 1) + t.values[static_cast<std::size_t>(n - 2)] +
                                   pow2(n - 1));
            }
            break;
        }
        case SeqName::F:
            for (int n = 0; n <= max_n; ++n) t.values.push_back(pow2(2 * n));
            break;
        case SeqName::G:
        case SeqName::H: {  // grid-derived, indexed from row 1
            t.first_index = 1;
            const auto grid = generate(max_n);
            BigInt ones = 0;
            for (int m = 1; m <= max_n; ++m) {
                ones += grid.row_ones(m);
                t.values.push_back(name == SeqName::G ? ones : BigInt(m) * m - ones);
            }
            break;
        }
    }
    return t;
}

std::optional<BigInt> closed_form_exact(SeqName name, int n) {
    if (n < 0) throw std::invalid_argument("sequence index must be >= 0");
    switch (name) {
        case SeqName::A: return pow2(n);
        case SeqName::B:
        case SeqName::I: return (pow2(n + 2) - (n % 2 == 0 ? 1 : -1)) / 3;
        case SeqName::D:
            if (n == 0) return BigInt(1);
            if (n == 1) return BigInt(4);
            // (13/8) 4^n - 2*2^n + 1; integral for n >= 2
            return 13 * pow2(2 * n - 3) - pow2(n + 1) + 1;
        case SeqName::F: return pow2(2 * n);
        default: return std::nullopt;
    }
}

double growth_root() { return (3.0 + std::sqrt(17.0)) / 2.0; }

double closed_form_real(SeqName name, int n) {
    if (n < 0) throw std::invalid_argument("sequence index must be >= 0");
    const double s = std::sqrt(17.0);
    const double rp = (3.0 + s) / 2.0;
    const double rm = (3.0 - s) / 2.0;
    switch (name) {
        case SeqName::C:
            return (17.0 + 5.0 * s) / 34.0 * std::pow(rp, n) +
                   (17.0 - 5.0 * s) / 34.0 * std::pow(rm, n);
        case SeqName::E:
            return (17.0 + 7.0 * s) / 68.0 * std::pow(rp, n) +
                   (17.0 - 7.0 * s) / 68.0 * std::pow(rm, n) +
                   (std::pow(2.0, n + 2) - (n % 2 == 0 ? 1.0 : -1.0)) / 6.0;
        default: {
            const auto exact = closed_form_exact(name, n);
            if (!exact) throw std::invalid_argument("no closed form for this sequence");
            return static_cast<double>(*exact);
        }
    }
}

}  // namespace rhombus
