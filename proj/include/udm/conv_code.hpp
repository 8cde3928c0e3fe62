#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace udm {

/// Rate-1/2 feed-forward convolutional code with 256 states (constraint
/// length 9), generators 561/753 octal — the UMTS rate-1/2 configuration.
/// Frames are terminated with 8 zero tail bits.
struct ConvCode {
    int constraint_length = 9;
    std::uint32_t g0 = 0561;  // taps, MSB = current input bit
    std::uint32_t g1 = 0753;

    int memory() const { return constraint_length - 1; }
    int states() const { return 1 << memory(); }
    int coded_length(int n_info) const { return 2 * (n_info + memory()); }
};

namespace detail {
inline int parity(std::uint32_t x) { return std::popcount(x) & 1; }
}

/// Encodes the payload plus tail bits; output has 2*(n + memory) bits,
/// generator g0's bit first in each pair.
inline std::vector<std::uint8_t> conv_encode(std::span<const std::uint8_t> bits,
                                             const ConvCode& code = {}) {
    if (bits.empty())
        throw std::invalid_argument("conv_encode: empty input");
    const int mem = code.memory();
    std::vector<std::uint8_t> out;
    out.reserve(2 * (bits.size() + mem));
    std::uint32_t window = 0;  // bit (K-1) = current input, bit 0 = oldest
    auto step = [&](std::uint8_t u) {
        window = (static_cast<std::uint32_t>(u & 1) << mem) | (window >> 1);
        out.push_back(static_cast<std::uint8_t>(detail::parity(window & code.g0)));
        out.push_back(static_cast<std::uint8_t>(detail::parity(window & code.g1)));
    };
    for (std::uint8_t b : bits) step(b);
    for (int i = 0; i < mem; ++i) step(0);
    return out;
}

/// Soft-input Viterbi decoder over the terminated 256-state trellis.
/// Inputs are LLR-like values (positive favors coded bit 0), two per trellis
/// step; the branch metric is the correlation sum(+-L). Returns the payload
/// bit estimates (tail bits dropped). Metric ties keep the lower predecessor
/// state, so an all-zero input decodes to the all-zero path.
inline std::vector<std::uint8_t> viterbi_decode(std::span<const double> llrs, int n_info,
                                                const ConvCode& code = {}) {
    const int mem = code.memory();
    const int n_steps = n_info + mem;
    if (static_cast<int>(llrs.size()) != 2 * n_steps)
        throw std::invalid_argument("viterbi_decode: LLR length != 2*(n_info + memory)");
    const int n_states = code.states();
    const double neg_inf = -std::numeric_limits<double>::infinity();

    std::vector<double> metric(n_states, neg_inf), next_metric(n_states);
    metric[0] = 0.0;
    // one predecessor bit per (step, state): LSB of the surviving predecessor
    std::vector<std::uint8_t> survivor(static_cast<std::size_t>(n_steps) * n_states);

    for (int t = 0; t < n_steps; ++t) {
        const double l0 = llrs[2 * t];
        const double l1 = llrs[2 * t + 1];
        std::uint8_t* surv = survivor.data() + static_cast<std::size_t>(t) * n_states;
        for (int ns = 0; ns < n_states; ++ns) {
            const int u = ns >> (mem - 1);           // input bit that led here
            const int base = (ns & ((1 << (mem - 1)) - 1)) << 1;
            double best = neg_inf;
            std::uint8_t best_bit = 0;
            for (int b = 0; b < 2; ++b) {
                const int ps = base | b;
                if (metric[ps] == neg_inf) continue;
                const std::uint32_t window =
                    (static_cast<std::uint32_t>(u) << mem) | static_cast<std::uint32_t>(ps);
                const int c0 = detail::parity(window & code.g0);
                const int c1 = detail::parity(window & code.g1);
                const double m = metric[ps] + (c0 ? -l0 : l0) + (c1 ? -l1 : l1);
                if (m > best) {
                    best = m;
                    best_bit = static_cast<std::uint8_t>(b);
                }
            }
            next_metric[ns] = best;
            surv[ns] = best_bit;
        }
        metric.swap(next_metric);
    }

    // trace back from the zero state (terminated trellis)
    std::vector<std::uint8_t> decoded(n_steps);
    int state = 0;
    for (int t = n_steps - 1; t >= 0; --t) {
        decoded[t] = static_cast<std::uint8_t>(state >> (mem - 1));
        const std::uint8_t b = survivor[static_cast<std::size_t>(t) * n_states + state];
        state = ((state & ((1 << (mem - 1)) - 1)) << 1) | b;
    }
    decoded.resize(n_info);
    return decoded;
}

}  // namespace udm
