#include "monogrid/budget.hpp"

#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace monogrid {

BudgetGuard::BudgetGuard(const Budget& budget) : start_(std::chrono::steady_clock::now()), node_limit_(budget.node_limit)
{
    if (budget.time_limit) {
        deadline_ = start_ + *budget.time_limit;
        time_limit_ms_ = budget.time_limit->count();
    }
}

std::string BudgetGuard::reason() const
{
    std::lock_guard lock(mutex_);
    return reason_;
}

void BudgetGuard::stop(std::string why)
{
    {
        std::lock_guard lock(mutex_);
        if (reason_.empty())
            reason_ = std::move(why);
    }
    stopped_.store(true);
    throw budget_exhausted{reason()};
}

void parallel_for(std::size_t tasks, unsigned threads, const std::function<void(std::size_t)>& fn)
{
    if (threads <= 1 || tasks <= 1) {
        for (std::size_t i = 0; i < tasks; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t count = std::min<std::size_t>(threads, tasks);
    pool.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
        pool.emplace_back(worker);
    pool.clear();
    if (first_error)
        std::rethrow_exception(first_error);
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("MONOGRID_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace monogrid
