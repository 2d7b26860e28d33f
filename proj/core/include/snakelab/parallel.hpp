#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace snakelab {

/// Global worker count used by replica-parallel loops.  0 means "use
/// hardware_concurrency".  Set once at startup (e.g. from --threads).
inline int& thread_count() {
    static int n = 0;
    return n;
}

inline int effective_threads() {
    int n = thread_count();
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    return n;
}

/// Runs fn(replica) for replica in [0, replicas).  Work is distributed by an
/// atomic counter; determinism is up to the caller, who should key all
/// randomness on the replica index and write results into a pre-sized slot.
/// Aggregate afterwards in index order so reductions do not depend on the
/// schedule or on the number of workers.
template <typename Fn>
void parallel_replicas(std::size_t replicas, Fn&& fn) {
    const int workers = std::min<std::size_t>(effective_threads(), replicas ? replicas : 1);
    if (workers <= 1) {
        for (std::size_t r = 0; r < replicas; ++r) fn(r);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t r = next.fetch_add(1);
                if (r >= replicas) return;
                try {
                    fn(r);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Fixed-order pairwise summation; deterministic for a given input order.
inline double pairwise_sum(const double* data, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
    return pairwise_sum(v.data(), v.size());
}

} // namespace snakelab
