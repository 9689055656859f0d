#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rigidkit {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are
/// claimed dynamically, so callers must write results into per-index slots;
/// that keeps output independent of the worker count. The first exception
/// thrown by any body is rethrown after all threads join.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1U, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(count);
            }
        }
    };

    std::vector<std::jthread> threads;
    auto spawn = std::min<std::size_t>(workers, count) - 1;
    threads.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t)
        threads.emplace_back(run);
    run();
    threads.clear();
    if (failure)
        std::rethrow_exception(failure);
}

}  // namespace rigidkit
