#pragma once

// Deterministic work distribution: results are collected by task index, so the
// output never depends on thread scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace syzygy {

// Applies fn(i) for i in [0, count) using up to `threads` worker threads and
// returns the results in index order.  The first exception thrown by any task
// is rethrown on the calling thread after all workers have stopped.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int threads, Fn&& fn)
{
    std::vector<Result> results(count);
    if (count == 0)
        return results;
    if (threads < 1)
        threads = 1;
    std::size_t workers = std::min(static_cast<std::size_t>(threads), count);

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = fn(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count)
                return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();

    if (error)
        std::rethrow_exception(error);
    return results;
}

}  // namespace syzygy
