#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "udm/alphabet.hpp"

namespace udm {

/// Bijective symbol-to-label mapping with the redundant-label decode rule.
///
/// encode_table[k] is the label of the k-th symbol. The lowest symbol d_0 is
/// never produced by the LLR quantizer, so its label is redundant; when that
/// label appears at a memory output it is decoded as d_1 instead. The
/// redirect is part of the mapping so that every consumer of the inverse
/// sees the same behavior.
class Mapping {
  public:
    Mapping() = default;

    Mapping(SymbolAlphabet alphabet, std::vector<Label> encode_table, bool redirect_lowest = true)
        : alphabet_(std::move(alphabet)), encode_(std::move(encode_table)) {
        const int k_count = alphabet_.size();
        if (static_cast<int>(encode_.size()) != k_count)
            throw std::invalid_argument("Mapping: encode table size != alphabet size");
        decode_.assign(k_count, -1);
        for (int k = 0; k < k_count; ++k) {
            const Label s = encode_[k];
            if (s >= static_cast<Label>(k_count))
                throw std::invalid_argument("Mapping: label out of range");
            if (decode_[s] != -1)
                throw std::invalid_argument("Mapping: duplicate label (not a permutation)");
            decode_[s] = k;
        }
        if (redirect_lowest && k_count >= 2) {
            redirect_ = {encode_[0], 1};
            decode_[encode_[0]] = 1;
        }
    }

    const SymbolAlphabet& alphabet() const { return alphabet_; }
    const std::vector<Label>& encode_table() const { return encode_; }

    /// (redirected label, replacement symbol index), if the redirect is set.
    std::optional<std::pair<Label, int>> decode_redirect() const { return redirect_; }

    Label encode(int symbol_index) const { return encode_[symbol_index]; }

    /// Symbol index for a label, redirect applied.
    int decode_index(Label s) const { return decode_[s]; }

    /// Symbol value for a label, redirect applied.
    double decode(Label s) const { return alphabet_.symbols[decode_[s]]; }

    /// Signed offset (value * 2^F) for a label, redirect applied.
    int decode_offset(Label s) const { return alphabet_.offset(decode_[s]); }

    bool operator==(const Mapping&) const = default;

  private:
    SymbolAlphabet alphabet_;
    std::vector<Label> encode_;
    std::vector<int> decode_;  // label -> symbol index, redirect applied
    std::optional<std::pair<Label, int>> redirect_;
};

/// 2's-complement representation: label = N-bit pattern of the offset m_k.
inline Mapping mapping_twos_complement(const SymbolAlphabet& alphabet) {
    const int k_count = alphabet.size();
    std::vector<Label> enc(k_count);
    for (int k = 0; k < k_count; ++k)
        enc[k] = static_cast<Label>(alphabet.offset(k) & (k_count - 1));
    return Mapping(alphabet, std::move(enc));
}

/// Sign-magnitude representation: label = [sign | magnitude] of the offset.
/// The most-negative offset has no SM pattern; it takes the otherwise unused
/// "negative zero" pattern 10...0 so the mapping stays a bijection.
inline Mapping mapping_sign_magnitude(const SymbolAlphabet& alphabet) {
    const int k_count = alphabet.size();
    const int sign_bit = k_count / 2;
    std::vector<Label> enc(k_count);
    for (int k = 0; k < k_count; ++k) {
        const int m = alphabet.offset(k);
        if (m >= 0)
            enc[k] = static_cast<Label>(m);
        else if (m == -sign_bit)
            enc[k] = static_cast<Label>(sign_bit);
        else
            enc[k] = static_cast<Label>(sign_bit - m);
    }
    return Mapping(alphabet, std::move(enc));
}

/// Arbitrary representation from a permutation of the label space.
inline Mapping mapping_from_permutation(const SymbolAlphabet& alphabet, std::vector<Label> perm) {
    return Mapping(alphabet, std::move(perm));
}

/// Label-to-label recoding tables turning one representation into another.
struct RecodePair {
    std::vector<Label> forward;  // gamma
    std::vector<Label> inverse;  // gamma^-1
};

/// Builds gamma with gamma(base.encode(d)) = target.encode(d) for every
/// symbol, so that recoding the base representation realizes the target.
inline RecodePair recode_tables(const Mapping& base, const Mapping& target) {
    if (base.alphabet() != target.alphabet())
        throw std::invalid_argument("recode_tables: alphabet mismatch");
    const int k_count = base.alphabet().size();
    RecodePair rp;
    rp.forward.resize(k_count);
    rp.inverse.resize(k_count);
    for (int k = 0; k < k_count; ++k) {
        rp.forward[base.encode(k)] = target.encode(k);
        rp.inverse[target.encode(k)] = base.encode(k);
    }
    return rp;
}

}  // namespace udm
