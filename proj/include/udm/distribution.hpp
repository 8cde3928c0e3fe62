#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udm/alphabet.hpp"

namespace udm {

/// Probability mass function over a symbol alphabet. Entries must be
/// non-negative and sum to 1 within 1e-12; nothing is renormalized silently.
class SymbolDistribution {
  public:
    SymbolDistribution() = default;

    SymbolDistribution(SymbolAlphabet alphabet, std::vector<double> pmf)
        : alphabet_(std::move(alphabet)), pmf_(std::move(pmf)) {
        if (static_cast<int>(pmf_.size()) != alphabet_.size())
            throw std::invalid_argument("SymbolDistribution: pmf size != alphabet size");
        double sum = 0.0;
        for (double p : pmf_) {
            if (!(p >= 0.0))
                throw std::invalid_argument("SymbolDistribution: negative or NaN probability");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("SymbolDistribution: probabilities sum to " +
                                        std::to_string(sum) + ", expected 1");
    }

    const SymbolAlphabet& alphabet() const { return alphabet_; }
    const std::vector<double>& pmf() const { return pmf_; }
    double operator[](int k) const { return pmf_[k]; }
    int size() const { return static_cast<int>(pmf_.size()); }

    /// E[d^2] under this distribution.
    double second_moment() const {
        double s = 0.0;
        for (int k = 0; k < size(); ++k)
            s += pmf_[k] * alphabet_.symbols[k] * alphabet_.symbols[k];
        return s;
    }

  private:
    SymbolAlphabet alphabet_;
    std::vector<double> pmf_;
};

namespace detail {
inline SymbolDistribution normalized(SymbolAlphabet alphabet, std::vector<double> w) {
    double sum = 0.0;
    for (double x : w) sum += x;
    for (double& x : w) x /= sum;
    // push the rounding residue onto the largest entry so the total is exact
    std::size_t top = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[top]) top = i;
    double resid = 1.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != top) resid -= w[i];
    w[top] = resid;
    return SymbolDistribution(std::move(alphabet), std::move(w));
}
}  // namespace detail

/// Uniform distribution over d_1..d_K (the lowest symbol gets probability 0,
/// matching what the LLR quantizer can produce).
inline SymbolDistribution uniform_pmf(const SymbolAlphabet& alphabet) {
    const int k_count = alphabet.size();
    std::vector<double> p(k_count, 1.0 / (k_count - 1));
    p[0] = 0.0;
    return detail::normalized(alphabet, std::move(p));
}

/// Discretized zero-mean Gaussian-like PMF, p(d) ~ exp(-d^2 / (2 s^2)),
/// with the lowest symbol excluded.
inline SymbolDistribution gaussian_like_pmf(const SymbolAlphabet& alphabet, double sigma = 1.2) {
    const int k_count = alphabet.size();
    std::vector<double> p(k_count, 0.0);
    for (int k = 1; k < k_count; ++k) {
        const double d = alphabet.symbols[k];
        p[k] = std::exp(-d * d / (2.0 * sigma * sigma));
    }
    return detail::normalized(alphabet, std::move(p));
}

/// Symmetric bimodal PMF with peaks at the alphabet extremes, the shape the
/// quantized-LLR distribution takes at high SNR. Lowest symbol excluded.
inline SymbolDistribution bimodal_pmf(const SymbolAlphabet& alphabet, double sigma = 1.0) {
    const int k_count = alphabet.size();
    const double peak = alphabet.symbols[k_count - 1];
    std::vector<double> p(k_count, 0.0);
    for (int k = 1; k < k_count; ++k) {
        const double d = alphabet.symbols[k];
        const double r = std::abs(d) - peak;
        p[k] = std::exp(-r * r / (2.0 * sigma * sigma));
    }
    return detail::normalized(alphabet, std::move(p));
}

}  // namespace udm
