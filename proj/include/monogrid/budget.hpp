#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <string>

namespace monogrid {

/// Search limits. A search that hits either limit reports itself as
/// inexact instead of returning a number it cannot vouch for.
struct Budget {
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::uint64_t> node_limit;
    unsigned threads = 1;
};

struct budget_exhausted {
    std::string what;
};

/// Shared, thread-safe node/time accounting for one solver call.
class BudgetGuard {
public:
    explicit BudgetGuard(const Budget& budget);

    /// Counts one search node; throws budget_exhausted once a limit is hit
    /// (by this thread or any other sharing the guard).
    void tick()
    {
        if (stopped_.load(std::memory_order_relaxed))
            throw budget_exhausted{reason()};
        auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit_ && n > *node_limit_)
            stop("node limit of " + std::to_string(*node_limit_) + " nodes");
        if ((n & 1023u) == 0 && deadline_ && std::chrono::steady_clock::now() >= *deadline_)
            stop("time limit of " + std::to_string(time_limit_ms_) + " ms");
    }

    std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }
    bool stopped() const noexcept { return stopped_.load(); }
    std::string reason() const;
    std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

    [[noreturn]] void stop(std::string why);

private:
    std::chrono::steady_clock::time_point start_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    long long time_limit_ms_ = 0;
    std::optional<std::uint64_t> node_limit_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
    mutable std::mutex mutex_;
    std::string reason_;
};

/// Runs fn(i) for i in [0, tasks) on `threads` workers. Tasks are handed out
/// in increasing index order. The first exception thrown by any task stops
/// further hand-outs and is rethrown after all workers have joined.
void parallel_for(std::size_t tasks, unsigned threads, const std::function<void(std::size_t)>& fn);

/// Worker count from MONOGRID_THREADS, else hardware concurrency, else 1.
unsigned default_thread_count();

} // namespace monogrid
