#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace udm {

/// An N-bit binary label, stored in the low N bits.
using Label = std::uint32_t;

/// Hamming distance between two labels of the same bit width.
inline int hamming(Label a, Label b) { return std::popcount(a ^ b); }

/// Symmetric fixed-point symbol alphabet: K = 2^N uniformly spaced values
/// d_k = (k - 2^(N-1)) * 2^-F for k = 0..K-1, covering [-2^I, 2^I - 2^-F]
/// with I = N - 1 - F integer bits and F fractional bits.
struct SymbolAlphabet {
    int n_bits = 0;                // N
    int n_frac = 0;                // F
    std::vector<double> symbols;   // ascending, size K = 2^N

    int size() const { return static_cast<int>(symbols.size()); }
    int n_int() const { return n_bits - 1 - n_frac; }
    double step() const { return std::ldexp(1.0, -n_frac); }

    /// Signed integer offset of symbol index k: m = d_k * 2^F.
    int offset(int k) const { return k - (1 << (n_bits - 1)); }
    /// Symbol index of a signed offset m.
    int index_of_offset(int m) const { return m + (1 << (n_bits - 1)); }

    bool operator==(const SymbolAlphabet&) const = default;
};

inline SymbolAlphabet make_alphabet(int n_bits, int n_frac) {
    if (n_bits < 1)
        throw std::invalid_argument("make_alphabet: n_bits must be >= 1");
    if (n_frac < 0 || n_frac > n_bits - 1)
        throw std::invalid_argument("make_alphabet: n_frac must be in [0, n_bits-1]");
    if (n_bits > 20)
        throw std::invalid_argument("make_alphabet: n_bits too large");
    SymbolAlphabet a;
    a.n_bits = n_bits;
    a.n_frac = n_frac;
    const int k_count = 1 << n_bits;
    a.symbols.resize(k_count);
    const double scale = std::ldexp(1.0, -n_frac);
    for (int k = 0; k < k_count; ++k)
        a.symbols[k] = (k - k_count / 2) * scale;
    return a;
}

}  // namespace udm
