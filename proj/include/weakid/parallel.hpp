#pragma once

// Deterministic fan-out helper. Results are written by index, so output
// never depends on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace weakid {

/// Worker count: set_workers() if called, else $WEAKID_WORKERS, else the
/// hardware concurrency.
unsigned workers();
void set_workers(unsigned n);

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn)
{
    const unsigned w = workers();
    if (w <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t n = std::min<std::size_t>(w, count);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t)
        pool.emplace_back(body);
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn)
{
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

} // namespace weakid
