#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace domcert {

inline int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

// Applies f to every index in [0, count), claiming indices from a shared
// counter across at most jobs threads. Callers keep results deterministic
// by writing into per-index slots and merging in index order afterwards.
// The first exception wins and is rethrown on the calling thread once all
// workers have stopped.
inline void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
    if (jobs < 1) jobs = default_jobs();
    std::size_t workers = std::min(std::size_t(jobs), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_lock;
    std::exception_ptr error;
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> hold(error_lock);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    auto pool = std::vector<std::thread>();
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace domcert
