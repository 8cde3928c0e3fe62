#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace udm {

/// Worker count: explicit value if > 0, else the UDM_WORKERS environment
/// variable, else the machine's hardware concurrency.
inline int resolve_workers(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("UDM_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Runs fn(chunk) for every chunk index in [0, n_chunks) across `workers`
/// threads. Chunks are claimed dynamically; callers must make fn's result
/// depend only on the chunk index (e.g. write into a per-chunk slot) so that
/// the outcome is independent of scheduling.
inline void parallel_chunks(std::uint64_t n_chunks, int workers,
                            const std::function<void(std::uint64_t)>& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || n_chunks <= 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= n_chunks || failed.load()) return;
            try {
                fn(c);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_threads = static_cast<int>(std::min<std::uint64_t>(workers, n_chunks));
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace udm
