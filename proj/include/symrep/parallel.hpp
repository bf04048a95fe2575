#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace symrep {

// Run fn(0..count-1) across up to `jobs` threads. Work items must write
// only to their own pre-allocated slots; results are then independent of
// the thread count, which keeps every sweep deterministic under --jobs.
inline void parallel_for(int64_t count, int jobs, const std::function<void(int64_t)>& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    int workers = int(std::min<int64_t>(jobs, count));
    std::atomic<int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_lock;
    std::vector<std::thread> pool;
    pool.reserve(size_t(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (;;) {
                int64_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> hold(error_lock);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace symrep
