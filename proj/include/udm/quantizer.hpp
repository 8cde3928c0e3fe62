#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "udm/alphabet.hpp"
#include "udm/distribution.hpp"
#include "udm/parallel.hpp"
#include "udm/rng.hpp"

namespace udm {

/// Uniform N-bit LLR quantizer with input scaling delta.
struct QuantizerParams {
    SymbolAlphabet alphabet;
    double delta = 1.0;

    QuantizerParams() = default;
    QuantizerParams(SymbolAlphabet a, double d) : alphabet(std::move(a)), delta(d) {
        if (!(delta > 0.0))
            throw std::invalid_argument("QuantizerParams: delta must be > 0");
    }
};

/// BPSK over AWGN: x in {+1, -1} with noise variance sigma^2 per sample.
/// SNR[dB] = 10 log10(1 / sigma^2).
struct AwgnParams {
    double sigma2 = 1.0;

    static AwgnParams from_snr_db(double snr_db) {
        AwgnParams a;
        a.sigma2 = std::pow(10.0, -snr_db / 10.0);
        return a;
    }
    double snr_db() const { return 10.0 * std::log10(1.0 / sigma2); }
    double sigma() const { return std::sqrt(sigma2); }
};

/// BPSK symbol for a coded bit: 0 -> +1, 1 -> -1 (positive LLR favors 0).
inline double bpsk(int bit) { return bit == 0 ? 1.0 : -1.0; }

/// LLR of a received sample: L = 2 y / sigma^2.
inline double llr(double y, double sigma2) {
    if (!(sigma2 > 0.0))
        throw std::invalid_argument("llr: sigma2 must be > 0");
    return 2.0 * y / sigma2;
}

/// Quantizes an LLR to a signed offset q with |q| <= 2^(N-1)-1:
/// q = sign(L) * min(floor(delta |L| 2^F + 1/2), 2^(N-1)-1), sign(0) = +1.
/// The symbol value is q * 2^-F; the most-negative symbol is never produced,
/// which makes the output distribution symmetric.
inline int quantize_offset(double llr_value, const QuantizerParams& params) {
    if (std::isnan(llr_value))
        throw std::invalid_argument("quantize: NaN input");
    const int q_max = (1 << (params.alphabet.n_bits - 1)) - 1;
    const double scaled = params.delta * std::abs(llr_value) * std::ldexp(1.0, params.alphabet.n_frac);
    double mag = std::floor(scaled + 0.5);
    if (mag > q_max) mag = q_max;
    const int sign = llr_value < 0.0 ? -1 : 1;
    return sign * static_cast<int>(mag);
}

/// Quantizes an LLR to a symbol index into the alphabet.
inline int quantize_index(double llr_value, const QuantizerParams& params) {
    return params.alphabet.index_of_offset(quantize_offset(llr_value, params));
}

/// Quantizes an LLR to the symbol value itself.
inline double quantize(double llr_value, const QuantizerParams& params) {
    return params.alphabet.symbols[quantize_index(llr_value, params)];
}

namespace detail {

/// P(a <= y <= b) for y ~ N(mu, sigma^2), with +-inf bounds allowed. Picks
/// the erfc orientation that keeps tail probabilities accurate.
inline double gaussian_bin_prob(double a, double b, double mu, double sigma) {
    const double inv = 1.0 / (sigma * std::numbers::sqrt2);
    auto z = [&](double x) { return (x - mu) * inv; };
    const double mid = std::isinf(a) ? b : (std::isinf(b) ? a : 0.5 * (a + b));
    double p;
    if (mid >= mu) {
        const double za = std::isinf(a) ? -HUGE_VAL : z(a);
        const double zb = std::isinf(b) ? HUGE_VAL : z(b);
        p = 0.5 * (std::erfc(za) - std::erfc(zb));
    } else {
        const double za = std::isinf(a) ? HUGE_VAL : -z(a);
        const double zb = std::isinf(b) ? -HUGE_VAL : -z(b);
        p = 0.5 * (std::erfc(zb) - std::erfc(za));
    }
    return p < 0.0 ? 0.0 : p;
}

}  // namespace detail

/// Exact conditional distribution of the quantizer output given the coded
/// bit: the Gaussian density of y ~ N(x_b, sigma^2) integrated over each
/// quantizer bin, with bin edges mapped from LLR space to y space.
inline SymbolDistribution conditional_pmf(const QuantizerParams& params, const AwgnParams& awgn,
                                          int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("conditional_pmf: bit must be 0 or 1");
    const SymbolAlphabet& a = params.alphabet;
    const int q_max = (1 << (a.n_bits - 1)) - 1;
    const double mu = bpsk(bit);
    const double sigma = awgn.sigma();
    // LLR threshold between offsets q and q+1 is (q + 1/2) / (delta 2^F);
    // L = 2y/sigma^2 maps it to y space by * sigma^2 / 2.
    const double to_y = awgn.sigma2 / (2.0 * params.delta * std::ldexp(1.0, a.n_frac));
    std::vector<double> pmf(a.size(), 0.0);
    for (int q = -q_max; q <= q_max; ++q) {
        const double lo = (q == -q_max) ? -HUGE_VAL : (q - 0.5) * to_y;
        const double hi = (q == q_max) ? HUGE_VAL : (q + 0.5) * to_y;
        pmf[a.index_of_offset(q)] = detail::gaussian_bin_prob(lo, hi, mu, sigma);
    }
    return SymbolDistribution(a, std::move(pmf));
}

/// Marginal quantizer-output distribution under equiprobable coded bits.
inline SymbolDistribution marginal_pmf(const SymbolDistribution& p0,
                                       const SymbolDistribution& p1) {
    if (p0.alphabet() != p1.alphabet())
        throw std::invalid_argument("marginal_pmf: alphabet mismatch");
    std::vector<double> pmf(p0.size());
    for (int k = 0; k < p0.size(); ++k) pmf[k] = 0.5 * (p0[k] + p1[k]);
    return SymbolDistribution(p0.alphabet(), std::move(pmf));
}

/// Monte-Carlo estimate of conditional_pmf: histogram of quantize(llr(x_b + w))
/// over `trials` draws. Trials run in fixed-size blocks with seeds derived
/// per block and integer counts merged afterwards, so the result depends only
/// on (seed, trials), not on the worker count or scheduling.
inline SymbolDistribution estimate_pdc_mc(const QuantizerParams& params, const AwgnParams& awgn,
                                          int bit, std::uint64_t trials, std::uint64_t seed,
                                          int workers = 0) {
    if (trials < 1)
        throw std::invalid_argument("estimate_pdc_mc: trials must be >= 1");
    const SymbolAlphabet& a = params.alphabet;
    const double x = bpsk(bit);
    const double sigma = awgn.sigma();
    constexpr std::uint64_t kBlock = 1 << 16;
    const std::uint64_t n_blocks = (trials + kBlock - 1) / kBlock;
    std::vector<std::vector<std::uint64_t>> block_hist(n_blocks);
    parallel_chunks(n_blocks, workers, [&](std::uint64_t blk) {
        Rng rng(derive_seed(seed, blk));
        std::vector<std::uint64_t> hist(a.size(), 0);
        const std::uint64_t n = std::min(kBlock, trials - blk * kBlock);
        for (std::uint64_t i = 0; i < n; ++i) {
            const double y = x + sigma * rng.normal();
            ++hist[quantize_index(llr(y, awgn.sigma2), params)];
        }
        block_hist[blk] = std::move(hist);
    });
    std::vector<double> pmf(a.size());
    for (int k = 0; k < a.size(); ++k) {
        std::uint64_t total = 0;
        for (const auto& hist : block_hist) total += hist[k];
        pmf[k] = static_cast<double>(total) / static_cast<double>(trials);
    }
    return SymbolDistribution(a, std::move(pmf));
}

}  // namespace udm
