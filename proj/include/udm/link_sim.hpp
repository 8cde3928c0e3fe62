#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "udm/channel.hpp"
#include "udm/conv_code.hpp"
#include "udm/mapping.hpp"
#include "udm/parallel.hpp"
#include "udm/quantizer.hpp"
#include "udm/rng.hpp"

namespace udm {

enum class CodingScheme { Repetition, Convolutional };

/// End-to-end link: encoder -> BPSK -> AWGN -> LLR -> quantizer -> mapping ->
/// unreliable memory -> inverse mapping -> decoder.
struct LinkConfig {
    CodingScheme scheme = CodingScheme::Repetition;
    QuantizerParams quantizer;
    Mapping mapping;
    CrossoverMatrix channel;
    AwgnParams awgn;
    int n_info_bits = 1000;            // frame length (Convolutional)
    std::uint64_t seed = 1;
    std::uint64_t target_errors = 100; // stop once this many bit errors seen
    std::uint64_t max_bits = 10'000'000;
    bool memory_enabled = true;        // false bypasses map/memory/unmap
    int workers = 0;
};

struct BerPoint {
    double snr_db = 0.0;
    double ber = 0.0;
    std::uint64_t errors = 0;
    std::uint64_t bits = 0;
    double ci95 = 0.0;  // binomial 95% half-width

    bool operator==(const BerPoint&) const = default;
};

namespace detail {

inline BerPoint finish_point(double snr_db, std::uint64_t errors, std::uint64_t bits) {
    BerPoint p;
    p.snr_db = snr_db;
    p.errors = errors;
    p.bits = bits;
    p.ber = bits ? static_cast<double>(errors) / static_cast<double>(bits) : 0.0;
    p.ci95 = bits ? 1.96 * std::sqrt(p.ber * (1.0 - p.ber) / static_cast<double>(bits)) : 0.0;
    return p;
}

/// Stored-and-recovered quantized LLR: quantize, map to a label, pass the
/// label through the memory channel, decode (redirect applied). Returns the
/// symbol offset. The memory draws come from their own stream so that
/// enabling or bypassing the stage never shifts the noise sequence.
inline int through_memory(double llr_value, const QuantizerParams& qp, const Mapping& mapping,
                          const CrossoverMatrix& channel, bool memory_enabled, Rng& mem_rng) {
    const int k = quantize_index(llr_value, qp);
    if (!memory_enabled) return qp.alphabet.offset(k);
    const Label stored = mapping.encode(k);
    const Label read = apply_channel(stored, channel, mem_rng);
    return mapping.decode_offset(read);
}

}  // namespace detail

/// One repetition-coded block: both transmissions of every bit, memory on the
/// first transmission only. Returns (errors, bits).
inline std::pair<std::uint64_t, std::uint64_t> simulate_rep_block(const LinkConfig& config,
                                                                  std::uint64_t block_bits,
                                                                  std::uint64_t block_seed) {
    Rng bit_rng(derive_seed(block_seed, 0));
    Rng noise_rng(derive_seed(block_seed, 1));
    Rng mem_rng(derive_seed(block_seed, 2));
    const double sigma = config.awgn.sigma();
    std::uint64_t errors = 0;
    for (std::uint64_t i = 0; i < block_bits; ++i) {
        const int b = static_cast<int>(bit_rng.next_u64() & 1);
        const double x = bpsk(b);
        const double l1 = llr(x + sigma * noise_rng.normal(), config.awgn.sigma2);
        const double l2 = llr(x + sigma * noise_rng.normal(), config.awgn.sigma2);
        const int dbar = detail::through_memory(l1, config.quantizer, config.mapping,
                                                config.channel, config.memory_enabled, mem_rng);
        const int dsecond = config.quantizer.alphabet.offset(quantize_index(l2, config.quantizer));
        const int combined = dbar + dsecond;
        const int decided = combined > 0 ? 0 : (combined < 0 ? 1 : 0);
        if (decided != b) ++errors;
    }
    return {errors, block_bits};
}

/// One convolutional frame: random payload, encode, transmit, store all
/// quantized LLRs in the unreliable memory, Viterbi-decode. Returns
/// (payload bit errors, payload bits) and optionally the decoded bits.
inline std::pair<std::uint64_t, std::uint64_t> simulate_conv_frame(
    const LinkConfig& config, std::uint64_t frame_seed, const ConvCode& code = {},
    std::vector<std::uint8_t>* decoded_out = nullptr) {
    Rng bit_rng(derive_seed(frame_seed, 0));
    Rng noise_rng(derive_seed(frame_seed, 1));
    Rng mem_rng(derive_seed(frame_seed, 2));
    const int n_info = config.n_info_bits;
    std::vector<std::uint8_t> payload(n_info);
    for (int i = 0; i < n_info; ++i) payload[i] = static_cast<std::uint8_t>(bit_rng.next_u64() & 1);
    const std::vector<std::uint8_t> coded = conv_encode(payload, code);
    const double sigma = config.awgn.sigma();
    const double step = config.quantizer.alphabet.step();
    std::vector<double> stored(coded.size());
    for (std::size_t n = 0; n < coded.size(); ++n) {
        const double y = bpsk(coded[n]) + sigma * noise_rng.normal();
        const double l = llr(y, config.awgn.sigma2);
        stored[n] = step * detail::through_memory(l, config.quantizer, config.mapping,
                                                  config.channel, config.memory_enabled, mem_rng);
    }
    const std::vector<std::uint8_t> decoded = viterbi_decode(stored, n_info, code);
    std::uint64_t errors = 0;
    for (int i = 0; i < n_info; ++i)
        if (decoded[i] != payload[i]) ++errors;
    if (decoded_out) *decoded_out = decoded;
    return {errors, static_cast<std::uint64_t>(n_info)};
}

namespace detail {

/// Runs numbered blocks until the stop rule fires. Blocks are simulated in
/// parallel but counted strictly in index order, so the reported totals match
/// a sequential run regardless of worker count.
template <typename BlockFn>
BerPoint run_blocks(const LinkConfig& config, std::uint64_t block_bits, BlockFn&& block) {
    const std::uint64_t n_blocks = (config.max_bits + block_bits - 1) / block_bits;
    const int workers = resolve_workers(config.workers);
    const std::uint64_t wave = static_cast<std::uint64_t>(workers) * 4;
    std::uint64_t errors = 0, bits = 0, next_block = 0;
    bool stopped = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> results;
    while (!stopped && next_block < n_blocks) {
        const std::uint64_t count = std::min(wave, n_blocks - next_block);
        results.assign(count, {0, 0});
        parallel_chunks(count, workers, [&](std::uint64_t i) {
            results[i] = block(next_block + i, derive_seed(config.seed, next_block + i));
        });
        for (std::uint64_t i = 0; i < count; ++i) {
            errors += results[i].first;
            bits += results[i].second;
            if (errors >= config.target_errors) {
                stopped = true;
                break;
            }
        }
        next_block += count;
    }
    return finish_point(config.awgn.snr_db(), errors, bits);
}

}  // namespace detail

/// Monte-Carlo BER of the rate-1/2 repetition link.
inline BerPoint simulate_rep(const LinkConfig& config) {
    if (config.scheme != CodingScheme::Repetition)
        throw std::invalid_argument("simulate_rep: config.scheme mismatch");
    constexpr std::uint64_t kBlockBits = 16384;
    return detail::run_blocks(config, kBlockBits, [&](std::uint64_t idx, std::uint64_t seed) {
        const std::uint64_t n = std::min(kBlockBits, config.max_bits - idx * kBlockBits);
        return simulate_rep_block(config, n, seed);
    });
}

/// Monte-Carlo BER of the convolutionally coded link with Viterbi decoding.
inline BerPoint simulate_conv(const LinkConfig& config) {
    if (config.scheme != CodingScheme::Convolutional)
        throw std::invalid_argument("simulate_conv: config.scheme mismatch");
    if (config.n_info_bits < 1)
        throw std::invalid_argument("simulate_conv: n_info_bits must be >= 1");
    const ConvCode code;
    return detail::run_blocks(config, static_cast<std::uint64_t>(config.n_info_bits),
                              [&](std::uint64_t, std::uint64_t seed) {
                                  return simulate_conv_frame(config, seed, code);
                              });
}

}  // namespace udm
