#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "udm/alphabet.hpp"
#include "udm/rng.hpp"

namespace udm {

enum class FaultModel { Bsc, Sac };

/// Row-stochastic K x K matrix of label cross-over probabilities: entry
/// (k, k') is the probability that stored label k is read back as label k'.
/// Both supported fault models are i.i.d. per bit-cell, so entries depend
/// only on the Hamming distance between the two labels.
struct CrossoverMatrix {
    int n_bits = 0;
    FaultModel model = FaultModel::Bsc;
    double epsilon = 0.0;
    std::vector<double> p;  // row-major, K*K

    int size() const { return 1 << n_bits; }
    double operator()(Label from, Label to) const { return p[from * size() + to]; }
};

namespace detail {

inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <typename EntryFn>
CrossoverMatrix hamming_symmetric_matrix(int n_bits, FaultModel model, double epsilon,
                                         EntryFn&& entry) {
    if (n_bits < 1 || n_bits > 16)
        throw std::invalid_argument("crossover: n_bits out of range");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("crossover: epsilon must be in [0, 1]");
    CrossoverMatrix m;
    m.n_bits = n_bits;
    m.model = model;
    m.epsilon = epsilon;
    const int k_count = 1 << n_bits;
    std::vector<double> by_distance(n_bits + 1);
    for (int d = 0; d <= n_bits; ++d) by_distance[d] = entry(d);
    m.p.resize(static_cast<std::size_t>(k_count) * k_count);
    for (int k = 0; k < k_count; ++k)
        for (int kp = 0; kp < k_count; ++kp)
            m.p[static_cast<std::size_t>(k) * k_count + kp] =
                by_distance[hamming(static_cast<Label>(k), static_cast<Label>(kp))];
    return m;
}

}  // namespace detail

/// Parallel independent binary symmetric channels, one per bit-cell:
/// P(s -> s') = eps^d * (1-eps)^(N-d) with d the Hamming distance.
inline CrossoverMatrix bsc_crossover(int n_bits, double epsilon) {
    return detail::hamming_symmetric_matrix(n_bits, FaultModel::Bsc, epsilon, [&](int d) {
        return detail::ipow(epsilon, d) * detail::ipow(1.0 - epsilon, n_bits - d);
    });
}

/// Stuck-at channel: each bit-cell fails with probability eps and a failed
/// cell reads 0 or 1 with equal probability. The entry is the binomial sum
/// over the number of cells that are stuck but happen to agree:
///
///   P(s -> s') = sum_{l=0}^{N-d} C(N-d, l) (eps/2)^(d+l) (1-eps)^(N-d-l)
///
/// which collapses to (eps/2)^d (1-eps/2)^(N-d); the sum is evaluated as
/// written and the closed form serves as a test oracle.
inline CrossoverMatrix sac_crossover(int n_bits, double epsilon) {
    return detail::hamming_symmetric_matrix(n_bits, FaultModel::Sac, epsilon, [&](int d) {
        double sum = 0.0;
        for (int l = 0; l <= n_bits - d; ++l)
            sum += detail::binomial(n_bits - d, l) * detail::ipow(epsilon / 2.0, d + l) *
                   detail::ipow(1.0 - epsilon, n_bits - d - l);
        return sum;
    });
}

/// Draws a corrupted label from the channel's row for `label`. Bit-cell
/// faults are redrawn independently on every call (i.i.d. channel, no
/// persistent fault map). Exactly one uniform draw is consumed per bit, so
/// stream positions do not depend on outcomes.
inline Label apply_channel(Label label, const CrossoverMatrix& channel, Rng& rng) {
    Label out = label;
    for (int b = 0; b < channel.n_bits; ++b) {
        const double u = rng.uniform();
        const Label bit = 1u << b;
        if (channel.model == FaultModel::Bsc) {
            if (u < channel.epsilon) out ^= bit;
        } else {
            if (u < channel.epsilon / 2.0)
                out &= ~bit;  // stuck at 0
            else if (u < channel.epsilon)
                out |= bit;  // stuck at 1
        }
    }
    return out;
}

}  // namespace udm
