#pragma once

#include <cstdlib>
#include <functional>
#include <future>
#include <string>
#include <thread>
#include <vector>

namespace wavefuse {

// Parallelism cap: WAVEFUSE_THREADS if set, else hardware concurrency.
inline std::size_t thread_budget() {
    static const std::size_t budget = [] {
        if (const char* env = std::getenv("WAVEFUSE_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<std::size_t>(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return static_cast<std::size_t>(hw ? hw : 1);
    }();
    return budget;
}

namespace detail {

// Runs independent tasks, possibly concurrently.  Each task is internally
// sequential, so results do not depend on the schedule.
inline void run_tasks(std::vector<std::function<void()>> tasks) {
    if (tasks.empty()) return;
    if (thread_budget() <= 1 || tasks.size() == 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(tasks.size());
    for (auto& t : tasks) futures.push_back(std::async(std::launch::async, std::move(t)));
    for (auto& f : futures) f.get();
}

}  // namespace detail
}  // namespace wavefuse
