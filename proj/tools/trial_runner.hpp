#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace liftgirth::cli {

/// Runs trial(0..count-1) on `jobs` worker threads. Results and the first
/// exception (by trial index) do not depend on scheduling.
template <typename Result>
std::vector<Result> run_trials(int count, int jobs, const std::function<Result(int)>& trial)
{
    std::vector<Result> results(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < count; i = next++) {
            try {
                results[static_cast<std::size_t>(i)] = trial(i);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    const int workers = std::max(1, std::min(jobs, count));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return results;
}

} // namespace liftgirth::cli
