#pragma once
/**
 * @file parallel.hpp
 * @brief Deterministic fork/join map: results land in input order regardless
 *        of the number of worker threads, so every consumer is byte-stable
 *        under any --jobs setting.
 */

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace chargl {

/// Number of workers to use when the caller does not say: hardware threads,
/// at least 1.
inline int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/**
 * Apply fn to every item, returning the results in input order.  Work is
 * split into strided index sets, so the output (and any per-item cost skew)
 * is independent of scheduling.  The first exception thrown by any worker is
 * rethrown on the calling thread after all workers join.
 */
template <class Item, class Fn>
auto parallel_map_ordered(const std::vector<Item>& items, Fn fn, int jobs)
    -> std::vector<decltype(fn(items.front()))> {
    using Result = decltype(fn(items.front()));
    std::vector<Result> results(items.size());
    if (items.empty()) return results;
    const int workers = std::min<int>(std::max(jobs, 1), static_cast<int>(items.size()));
    if (workers == 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = static_cast<size_t>(w); i < items.size(); i += static_cast<size_t>(workers))
                    results[i] = fn(items[i]);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace chargl
