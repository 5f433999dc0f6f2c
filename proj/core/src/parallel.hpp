#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace brieskorn::detail {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `work(job)` for every job in [0, jobs) on up to `threads` workers pulling
/// from a shared counter. The first exception thrown by any worker is rethrown.
template <class Work>
void parallel_jobs(std::uint64_t jobs, unsigned threads, const std::atomic<bool>& stop, Work&& work) {
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            while (!stop.load(std::memory_order_relaxed)) {
                const std::uint64_t job = next.fetch_add(1);
                if (job >= jobs) break;
                work(job);
            }
        } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    const auto count = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), jobs));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
}

template <class Work>
void parallel_jobs(std::uint64_t jobs, unsigned threads, Work&& work) {
    const std::atomic<bool> never{false};
    parallel_jobs(jobs, threads, never, std::forward<Work>(work));
}

} // namespace brieskorn::detail
