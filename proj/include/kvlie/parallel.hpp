// Minimal fork/join helper for independent chunks.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace kvlie {

/// Worker count from KVLIE_THREADS, defaulting to 1.
inline unsigned default_thread_count()
{
    if (const char* env = std::getenv("KVLIE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                return static_cast<unsigned>(std::min<long>(v, 256));
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

/// Runs body(i) for i in [0, n). Each index runs exactly once; callers write
/// to per-index slots and combine them afterwards, so results do not depend
/// on scheduling. The first exception is rethrown after all workers join.
template <typename F>
void parallel_for(std::size_t n, unsigned threads, F&& body)
{
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                if (!failed.exchange(true)) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t count = std::min<std::size_t>(threads, n);
    for (std::size_t t = 0; t < count; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace kvlie
