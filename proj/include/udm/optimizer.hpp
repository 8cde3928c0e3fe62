#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udm/cost.hpp"
#include "udm/mapping.hpp"
#include "udm/parallel.hpp"
#include "udm/rng.hpp"

namespace udm {

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

/// Number of candidate mappings for an N-bit alphabet: (2^N)!.
inline std::uint64_t mapping_count(int n_bits) { return factorial(1 << n_bits); }

/// Exhaustive enumeration is practical up to this many label bits; the
/// default stops at 3 (40320 candidates) and 4 is opt-in.
inline constexpr int kDefaultEnumLimit = 3;
inline constexpr int kHardEnumLimit = 4;

inline void check_enumerable(int n_bits, int limit = kDefaultEnumLimit) {
    if (limit > kHardEnumLimit) limit = kHardEnumLimit;
    if (n_bits <= limit) return;
    throw std::invalid_argument(
        "exhaustive enumeration refused for n_bits=" + std::to_string(n_bits) +
        ": already 2.09e13 candidates at n_bits=4 (limit " + std::to_string(limit) +
        "; raise it explicitly for n_bits=4, use the hill-climb heuristic beyond)");
}

/// The index-th permutation of {0..k-1} in lexicographic order
/// (factorial-number-system unranking).
inline std::vector<Label> permutation_at_index(int k, std::uint64_t index) {
    std::vector<Label> pool(k);
    for (int i = 0; i < k; ++i) pool[i] = static_cast<Label>(i);
    std::vector<Label> out;
    out.reserve(k);
    std::uint64_t rem = index;
    for (int i = k - 1; i >= 0; --i) {
        const std::uint64_t f = factorial(i);
        const std::uint64_t digit = rem / f;
        rem %= f;
        out.push_back(pool[digit]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
    }
    return out;
}

/// Yields every candidate mapping exactly once, in lexicographic order of
/// the encode table.
class MappingEnumerator {
  public:
    explicit MappingEnumerator(SymbolAlphabet alphabet, int limit = kDefaultEnumLimit)
        : alphabet_(std::move(alphabet)) {
        check_enumerable(alphabet_.n_bits, limit);
        perm_.resize(alphabet_.size());
        for (int i = 0; i < alphabet_.size(); ++i) perm_[i] = static_cast<Label>(i);
    }

    std::optional<Mapping> next() {
        if (done_) return std::nullopt;
        Mapping m(alphabet_, perm_);
        done_ = !std::next_permutation(perm_.begin(), perm_.end());
        return m;
    }

  private:
    SymbolAlphabet alphabet_;
    std::vector<Label> perm_;
    bool done_ = false;
};

template <typename Fn>
void for_each_mapping(const SymbolAlphabet& alphabet, Fn&& fn, int limit = kDefaultEnumLimit) {
    MappingEnumerator en(alphabet, limit);
    while (auto m = en.next()) fn(*m);
}

struct RankedMapping {
    std::vector<Label> encode;
    double cost = 0.0;
};

struct OptimizationResult {
    Mapping best;
    double best_cost = 0.0;
    std::uint64_t evaluated = 0;
    std::vector<RankedMapping> ranking;  // cost-ascending, only if requested
};

struct OptimizeOptions {
    int enum_limit = kDefaultEnumLimit;
    bool keep_ranking = false;
    int workers = 0;  // 0 = resolve from environment / hardware
    // Enumerate one representative (encode[0] = 0) per XOR-relabeling orbit.
    // Valid because both fault models depend on labels only through Hamming
    // distance, which every bitwise complement preserves; cuts the space by
    // 2^N. Off by default; the unpruned search is the reference.
    bool prune_bit_symmetry = false;
};

/// Exhaustive minimization of the cost over all (2^N)! candidate mappings.
/// Ties break toward the lexicographically smallest encode table. The search
/// partitions the permutation index range into fixed chunks, so the result
/// does not depend on the worker count.
inline OptimizationResult optimize(const CostSpec& spec, const SymbolAlphabet& alphabet,
                                   const OptimizeOptions& options = {}) {
    check_enumerable(alphabet.n_bits, options.enum_limit);
    const PreparedCost cost(spec);
    const int k_count = alphabet.size();
    const bool prune = options.prune_bit_symmetry;
    const std::uint64_t total = prune ? factorial(k_count - 1) : factorial(k_count);
    // index -> encode table, in lexicographic order of the tables either way
    auto table_at = [&](std::uint64_t index) {
        if (!prune) return permutation_at_index(k_count, index);
        std::vector<Label> sub = permutation_at_index(k_count - 1, index);
        std::vector<Label> full(k_count);
        full[0] = 0;
        for (int i = 1; i < k_count; ++i) full[i] = sub[i - 1] + 1;
        return full;
    };
    constexpr std::uint64_t kChunk = 2520;
    const std::uint64_t n_chunks = (total + kChunk - 1) / kChunk;

    struct ChunkBest {
        double cost = 0.0;
        std::uint64_t index = 0;
    };
    std::vector<ChunkBest> best_per_chunk(n_chunks);
    std::vector<std::vector<RankedMapping>> ranked_per_chunk(
        options.keep_ranking ? n_chunks : 0);

    parallel_chunks(n_chunks, options.workers, [&](std::uint64_t c) {
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(begin + kChunk, total);
        std::vector<Label> perm = table_at(begin);
        ChunkBest local{0.0, UINT64_MAX};
        std::vector<RankedMapping>* ranked =
            options.keep_ranking ? &ranked_per_chunk[c] : nullptr;
        if (ranked) ranked->reserve(end - begin);
        for (std::uint64_t i = begin; i < end; ++i) {
            const Mapping m(alphabet, perm);
            const double value = cost(m);
            if (local.index == UINT64_MAX || value < local.cost) local = {value, i};
            if (ranked) ranked->push_back({perm, value});
            std::next_permutation(perm.begin() + (prune ? 1 : 0), perm.end());
        }
        best_per_chunk[c] = local;
    });

    ChunkBest best{0.0, UINT64_MAX};
    for (const ChunkBest& cb : best_per_chunk)
        if (best.index == UINT64_MAX || cb.cost < best.cost ||
            (cb.cost == best.cost && cb.index < best.index))
            best = cb;

    OptimizationResult result;
    result.best = Mapping(alphabet, table_at(best.index));
    result.best_cost = best.cost;
    result.evaluated = total;
    if (options.keep_ranking) {
        for (auto& chunk : ranked_per_chunk)
            result.ranking.insert(result.ranking.end(), std::make_move_iterator(chunk.begin()),
                                  std::make_move_iterator(chunk.end()));
        std::stable_sort(result.ranking.begin(), result.ranking.end(),
                         [](const RankedMapping& a, const RankedMapping& b) {
                             return a.cost < b.cost;
                         });
    }
    return result;
}

/// Independent exhaustive optimization at each SNR point (only meaningful
/// for the SNR-dependent costs).
inline std::vector<std::pair<double, OptimizationResult>> sweep(
    const CostSpec& spec_template, const std::vector<double>& snr_db_list,
    const SymbolAlphabet& alphabet, const OptimizeOptions& options = {}) {
    if (spec_template.kind != CostKind::MutualInfo && spec_template.kind != CostKind::RepErrorProb)
        throw std::invalid_argument("sweep: cost has no SNR dependence");
    std::vector<std::pair<double, OptimizationResult>> out;
    out.reserve(snr_db_list.size());
    for (double snr_db : snr_db_list) {
        const CostSpec spec = spec_template.with_awgn(AwgnParams::from_snr_db(snr_db));
        out.emplace_back(snr_db, optimize(spec, alphabet, options));
    }
    return out;
}

/// Random-restart steepest-descent over encode-table transpositions. This is
/// a heuristic for alphabets too large to enumerate; it carries no optimality
/// guarantee. Deterministic for a fixed seed.
inline OptimizationResult optimize_hill_climb(const CostSpec& spec, const SymbolAlphabet& alphabet,
                                              int restarts = 16, std::uint64_t seed = 1) {
    const PreparedCost cost(spec);
    const int k_count = alphabet.size();
    std::vector<Label> best_perm;
    double best_cost = 0.0;
    std::uint64_t evaluated = 0;
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<Label> perm(k_count);
        for (int i = 0; i < k_count; ++i) perm[i] = static_cast<Label>(i);
        for (int i = k_count - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        double current = cost(Mapping(alphabet, perm));
        ++evaluated;
        for (;;) {
            int best_i = -1, best_j = -1;
            double best_step = current;
            for (int i = 0; i < k_count; ++i)
                for (int j = i + 1; j < k_count; ++j) {
                    std::swap(perm[i], perm[j]);
                    const double value = cost(Mapping(alphabet, perm));
                    ++evaluated;
                    std::swap(perm[i], perm[j]);
                    if (value < best_step) {
                        best_step = value;
                        best_i = i;
                        best_j = j;
                    }
                }
            if (best_i < 0) break;
            std::swap(perm[best_i], perm[best_j]);
            current = best_step;
        }
        if (best_perm.empty() || current < best_cost ||
            (current == best_cost && perm < best_perm)) {
            best_cost = current;
            best_perm = perm;
        }
    }
    OptimizationResult result;
    result.best = Mapping(alphabet, best_perm);
    result.best_cost = best_cost;
    result.evaluated = evaluated;
    return result;
}

}  // namespace udm
