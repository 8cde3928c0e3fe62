#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "udm/channel.hpp"
#include "udm/distribution.hpp"
#include "udm/mapping.hpp"
#include "udm/quantizer.hpp"

namespace udm {

/// Mean squared error between the memory input symbol and the decoded output
/// symbol, averaged over the input distribution and the label channel. The
/// redundant-label redirect applies on the output side only.
inline double cost_mse(const Mapping& mapping, const SymbolDistribution& p_d,
                       const CrossoverMatrix& channel) {
    const int k_count = mapping.alphabet().size();
    if (p_d.size() != k_count || channel.size() != k_count)
        throw std::invalid_argument("cost_mse: dimension mismatch");
    double mse = 0.0;
    for (int k = 0; k < k_count; ++k) {
        const double w = p_d[k];
        if (w == 0.0) continue;
        const double d = mapping.alphabet().symbols[k];
        const Label s = mapping.encode(k);
        double inner = 0.0;
        for (int sp = 0; sp < k_count; ++sp) {
            const double e = d - mapping.decode(static_cast<Label>(sp));
            inner += e * e * channel(s, static_cast<Label>(sp));
        }
        mse += w * inner;
    }
    return mse;
}

/// Signal-to-MSE ratio in dB: 10 log10(E[d^2] / MSE). A reliable memory
/// (MSE = 0) reports +infinity.
inline double ser_db(const SymbolDistribution& p_d, double mse) {
    if (mse < 0.0)
        throw std::invalid_argument("ser_db: negative MSE");
    if (mse == 0.0)
        return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(p_d.second_moment() / mse);
}

/// Binary-input channel from the coded bit to the label read back from the
/// unreliable memory: the cascade of AWGN + quantizer (P_{d|c}), the data
/// mapping, and the label cross-over channel.
struct CompoundChannel {
    int n_bits = 0;
    std::vector<double> p0;  // P(label | c = 0), indexed by label
    std::vector<double> p1;  // P(label | c = 1)
};

inline CompoundChannel compound_crossover(const Mapping& mapping, const SymbolDistribution& pd_c0,
                                          const SymbolDistribution& pd_c1,
                                          const CrossoverMatrix& channel) {
    const int k_count = mapping.alphabet().size();
    if (pd_c0.size() != k_count || pd_c1.size() != k_count || channel.size() != k_count)
        throw std::invalid_argument("compound_crossover: dimension mismatch");
    CompoundChannel cc;
    cc.n_bits = mapping.alphabet().n_bits;
    cc.p0.assign(k_count, 0.0);
    cc.p1.assign(k_count, 0.0);
    for (int k = 0; k < k_count; ++k) {
        const Label s = mapping.encode(k);
        const double w0 = pd_c0[k];
        const double w1 = pd_c1[k];
        if (w0 == 0.0 && w1 == 0.0) continue;
        for (int sp = 0; sp < k_count; ++sp) {
            const double t = channel(s, static_cast<Label>(sp));
            cc.p0[sp] += w0 * t;
            cc.p1[sp] += w1 * t;
        }
    }
    return cc;
}

/// Mutual information I(c; s_bar) of the compound channel in bits per channel
/// use, assuming equiprobable coded bits. 0 log 0 counts as 0.
inline double mutual_information(const CompoundChannel& cc) {
    double info = 0.0;
    for (std::size_t k = 0; k < cc.p0.size(); ++k) {
        const double denom = cc.p0[k] + cc.p1[k];
        if (denom <= 0.0) continue;
        if (cc.p0[k] > 0.0) info += 0.5 * cc.p0[k] * std::log2(2.0 * cc.p0[k] / denom);
        if (cc.p1[k] > 0.0) info += 0.5 * cc.p1[k] * std::log2(2.0 * cc.p1[k] / denom);
    }
    return info < 0.0 ? 0.0 : info;
}

/// Exact error probability of rate-1/2 repetition combining where the first
/// transmission's quantized LLR passes through the unreliable memory and the
/// second is combined directly:
///
///   P_e = 1/2 Pr(dbar + d' < 0 | c=0) + 1/2 Pr(dbar + d' >= 0 | c=1).
///
/// The tie dbar + d' = 0 counts as an error only for c = 1. Sums run over
/// integer symbol offsets, so the comparison against zero is exact.
inline double rep_error_prob(const Mapping& mapping, const SymbolDistribution& pd_c0,
                             const SymbolDistribution& pd_c1, const CrossoverMatrix& channel) {
    const int k_count = mapping.alphabet().size();
    if (pd_c0.size() != k_count || pd_c1.size() != k_count || channel.size() != k_count)
        throw std::invalid_argument("rep_error_prob: dimension mismatch");
    // distribution of the decoded first transmission, by symbol offset
    const int off0 = mapping.alphabet().offset(0);
    std::vector<double> dec0(2 * k_count, 0.0), dec1(2 * k_count, 0.0);
    for (int k = 0; k < k_count; ++k) {
        const double w0 = pd_c0[k];
        const double w1 = pd_c1[k];
        if (w0 == 0.0 && w1 == 0.0) continue;
        const Label s = mapping.encode(k);
        for (int sp = 0; sp < k_count; ++sp) {
            const int idx = mapping.decode_offset(static_cast<Label>(sp)) - off0;
            const double t = channel(s, static_cast<Label>(sp));
            dec0[idx] += w0 * t;
            dec1[idx] += w1 * t;
        }
    }
    double pe = 0.0;
    for (int i = 0; i < 2 * k_count; ++i) {
        if (dec0[i] == 0.0 && dec1[i] == 0.0) continue;
        const int mbar = i + off0;
        for (int k = 0; k < k_count; ++k) {
            const int m = mapping.alphabet().offset(k);
            if (mbar + m < 0) pe += 0.5 * dec0[i] * pd_c0[k];
            if (mbar + m >= 0) pe += 0.5 * dec1[i] * pd_c1[k];
        }
    }
    return pe;
}

/// Which code-bit hypotheses the branch-metric model averages over.
enum class BranchHypothesis {
    AllZero,     // bm = d0 + d1 (metric distribution is a consequence of P_d)
    AverageAll,  // average over the four sign patterns (+-d0 +- d1)
};

/// Distribution of two-symbol branch metrics and the metric cross-over
/// induced by passing both symbols through the unreliable memory.
struct BranchMetricModel {
    std::vector<double> values;     // sorted distinct metric values, size M
    std::vector<double> pmf;        // P_bm over values
    std::vector<double> crossover;  // row-major M x M, P(bm_out | bm_in)

    int size() const { return static_cast<int>(values.size()); }
    double operator()(int m, int mp) const { return crossover[m * size() + mp]; }
};

inline BranchMetricModel branch_metric_model(const Mapping& mapping, const SymbolDistribution& p_d,
                                             const CrossoverMatrix& channel,
                                             BranchHypothesis hypothesis = BranchHypothesis::AllZero) {
    const int k_count = mapping.alphabet().size();
    if (p_d.size() != k_count || channel.size() != k_count)
        throw std::invalid_argument("branch_metric_model: dimension mismatch");
    const SymbolAlphabet& a = mapping.alphabet();
    const double scale = a.step();
    // Work on integer offset sums; translate to values at the end. Offsets of
    // a pair sum lie in [2*off_min, 2*off_max]; signed hypotheses negate
    // single offsets, which stays within [-2*off_max', 2*off_max'] where
    // off_max' = max(|off_min|, off_max).
    const int off_lim = 1 << a.n_bits;  // |offset| <= 2^(N-1), sums < 2^N
    const int span = 4 * off_lim + 1;   // sum index = sum + 2*off_lim
    // joint[in][out] mass, accumulated over pairs and hypotheses
    std::vector<double> joint(static_cast<std::size_t>(span) * span, 0.0);

    // per-symbol decoded-offset distribution: row k = P(decoded offset | stored symbol k)
    std::vector<std::vector<std::pair<int, double>>> spread(k_count);
    for (int k = 0; k < k_count; ++k) {
        std::map<int, double> acc;
        const Label s = mapping.encode(k);
        for (int sp = 0; sp < k_count; ++sp) {
            const double t = channel(s, static_cast<Label>(sp));
            if (t != 0.0) acc[mapping.decode_offset(static_cast<Label>(sp))] += t;
        }
        spread[k].assign(acc.begin(), acc.end());
    }

    const int n_hyp = hypothesis == BranchHypothesis::AllZero ? 1 : 4;
    const double hyp_w = 1.0 / n_hyp;
    for (int h = 0; h < n_hyp; ++h) {
        const int sign0 = (h & 1) ? -1 : 1;
        const int sign1 = (h & 2) ? -1 : 1;
        for (int k0 = 0; k0 < k_count; ++k0) {
            if (p_d[k0] == 0.0) continue;
            for (int k1 = 0; k1 < k_count; ++k1) {
                const double w = hyp_w * p_d[k0] * p_d[k1];
                if (w == 0.0) continue;
                const int bm_in = sign0 * a.offset(k0) + sign1 * a.offset(k1) + 2 * off_lim;
                for (const auto& [o0, t0] : spread[k0])
                    for (const auto& [o1, t1] : spread[k1]) {
                        const int bm_out = sign0 * o0 + sign1 * o1 + 2 * off_lim;
                        joint[static_cast<std::size_t>(bm_in) * span + bm_out] += w * t0 * t1;
                    }
            }
        }
    }

    // collect the distinct metric values that carry mass on either side
    std::vector<double> row_mass(span, 0.0), col_mass(span, 0.0);
    for (int i = 0; i < span; ++i)
        for (int j = 0; j < span; ++j) {
            const double v = joint[static_cast<std::size_t>(i) * span + j];
            row_mass[i] += v;
            col_mass[j] += v;
        }
    std::vector<int> used;
    for (int i = 0; i < span; ++i)
        if (row_mass[i] > 0.0 || col_mass[i] > 0.0) used.push_back(i);

    BranchMetricModel model;
    const int m_count = static_cast<int>(used.size());
    model.values.resize(m_count);
    model.pmf.resize(m_count);
    model.crossover.assign(static_cast<std::size_t>(m_count) * m_count, 0.0);
    for (int m = 0; m < m_count; ++m) {
        model.values[m] = (used[m] - 2 * off_lim) * scale;
        model.pmf[m] = row_mass[used[m]];
    }
    for (int m = 0; m < m_count; ++m) {
        if (model.pmf[m] == 0.0) {
            // value only reachable at the output; give its row an identity
            // placeholder to keep the matrix row-stochastic
            model.crossover[static_cast<std::size_t>(m) * m_count + m] = 1.0;
            continue;
        }
        for (int mp = 0; mp < m_count; ++mp)
            model.crossover[static_cast<std::size_t>(m) * m_count + mp] =
                joint[static_cast<std::size_t>(used[m]) * span + used[mp]] / model.pmf[m];
    }
    return model;
}

/// Mean squared branch-metric error: the weighted squared distance between
/// metrics computed before and after the unreliable memory.
inline double msbe(const BranchMetricModel& model) {
    const int m_count = model.size();
    double out = 0.0;
    for (int m = 0; m < m_count; ++m) {
        const double w = model.pmf[m];
        if (w == 0.0) continue;
        double inner = 0.0;
        for (int mp = 0; mp < m_count; ++mp) {
            const double e = model.values[m] - model.values[mp];
            inner += e * e * model(m, mp);
        }
        out += w * inner;
    }
    return out;
}

enum class CostKind { Mse, MutualInfo, RepErrorProb, Msbe };

inline const char* cost_kind_name(CostKind k) {
    switch (k) {
        case CostKind::Mse: return "mse";
        case CostKind::MutualInfo: return "mi";
        case CostKind::RepErrorProb: return "rep";
        case CostKind::Msbe: return "msbe";
    }
    return "?";
}

/// Selects one of the four application costs together with its context.
/// Mse/Msbe need an input distribution; MutualInfo/RepErrorProb need the
/// quantizer and AWGN parameters (the conditional PMFs are derived from
/// them). Mutual information enters as cost -I so lower is always better.
struct CostSpec {
    CostKind kind = CostKind::Mse;
    CrossoverMatrix channel;
    std::optional<SymbolDistribution> input_dist;  // Mse, Msbe
    std::optional<QuantizerParams> quantizer;      // MutualInfo, RepErrorProb
    std::optional<AwgnParams> awgn;                // MutualInfo, RepErrorProb
    BranchHypothesis hypothesis = BranchHypothesis::AllZero;

    static CostSpec mse(CrossoverMatrix channel, SymbolDistribution p_d) {
        CostSpec s;
        s.kind = CostKind::Mse;
        s.channel = std::move(channel);
        s.input_dist = std::move(p_d);
        return s;
    }
    static CostSpec msbe(CrossoverMatrix channel, SymbolDistribution p_d,
                         BranchHypothesis hyp = BranchHypothesis::AllZero) {
        CostSpec s;
        s.kind = CostKind::Msbe;
        s.channel = std::move(channel);
        s.input_dist = std::move(p_d);
        s.hypothesis = hyp;
        return s;
    }
    static CostSpec mutual_info(CrossoverMatrix channel, QuantizerParams q, AwgnParams awgn) {
        CostSpec s;
        s.kind = CostKind::MutualInfo;
        s.channel = std::move(channel);
        s.quantizer = std::move(q);
        s.awgn = awgn;
        return s;
    }
    static CostSpec rep_error(CrossoverMatrix channel, QuantizerParams q, AwgnParams awgn) {
        CostSpec s;
        s.kind = CostKind::RepErrorProb;
        s.channel = std::move(channel);
        s.quantizer = std::move(q);
        s.awgn = awgn;
        return s;
    }

    CostSpec with_awgn(AwgnParams a) const {
        CostSpec s = *this;
        s.awgn = a;
        return s;
    }
};

/// A CostSpec with its SNR-dependent context resolved, ready to evaluate on
/// many candidate mappings.
class PreparedCost {
  public:
    explicit PreparedCost(const CostSpec& spec) : spec_(spec) {
        switch (spec_.kind) {
            case CostKind::Mse:
            case CostKind::Msbe:
                if (!spec_.input_dist)
                    throw std::invalid_argument("CostSpec: input distribution required");
                break;
            case CostKind::MutualInfo:
            case CostKind::RepErrorProb:
                if (!spec_.quantizer || !spec_.awgn)
                    throw std::invalid_argument("CostSpec: quantizer and AWGN params required");
                p0_ = conditional_pmf(*spec_.quantizer, *spec_.awgn, 0);
                p1_ = conditional_pmf(*spec_.quantizer, *spec_.awgn, 1);
                break;
        }
    }

    double operator()(const Mapping& mapping) const {
        switch (spec_.kind) {
            case CostKind::Mse:
                return cost_mse(mapping, *spec_.input_dist, spec_.channel);
            case CostKind::Msbe:
                return msbe(branch_metric_model(mapping, *spec_.input_dist, spec_.channel,
                                                spec_.hypothesis));
            case CostKind::MutualInfo:
                return -mutual_information(compound_crossover(mapping, *p0_, *p1_, spec_.channel));
            case CostKind::RepErrorProb:
                return rep_error_prob(mapping, *p0_, *p1_, spec_.channel);
        }
        return 0.0;
    }

    const CostSpec& spec() const { return spec_; }
    const SymbolDistribution& pd_c0() const { return *p0_; }
    const SymbolDistribution& pd_c1() const { return *p1_; }

  private:
    CostSpec spec_;
    std::optional<SymbolDistribution> p0_, p1_;
};

}  // namespace udm
