#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rstk::app {

// hardware concurrency, capped by RS_TOOLKIT_THREADS when set; throws ConfigError on a bad value
int worker_count();

// Runs f(i) for i in [0, n) on up to worker_count() threads. Each index is handled
// exactly once; callers write into preallocated slots so the result order is fixed.
// The exception from the lowest failing index is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, F&& f)
{
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = n;
    std::exception_ptr failure;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                f(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(body);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace rstk::app
