#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace lt::detail {

/// Smallest i in [0, limit) for which a probe returns true.
///
/// `make_probe()` is called once per worker and must return a callable
/// `bool(std::uint64_t)` owning whatever scratch state it needs. Workers
/// scan contiguous chunks in ascending order and stop once a smaller hit is
/// known, so the answer does not depend on `jobs`.
template <class MakeProbe>
std::optional<std::uint64_t> first_hit(std::uint64_t limit, unsigned jobs, MakeProbe make_probe) {
    if (jobs <= 1 || limit < 2 * static_cast<std::uint64_t>(jobs)) {
        auto probe = make_probe();
        for (std::uint64_t i = 0; i < limit; ++i)
            if (probe(i))
                return i;
        return std::nullopt;
    }

    std::atomic<std::uint64_t> best{limit};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const std::uint64_t chunk = (limit + jobs - 1) / jobs;

    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(limit, lo + chunk);
        if (lo >= hi)
            break;
        workers.emplace_back([&, lo, hi] {
            try {
                auto probe = make_probe();
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (i >= best.load(std::memory_order_relaxed))
                        return;
                    if (probe(i)) {
                        auto cur = best.load();
                        while (i < cur && !best.compare_exchange_weak(cur, i)) {
                        }
                        return;
                    }
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto &t : workers)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    auto b = best.load();
    if (b < limit)
        return b;
    return std::nullopt;
}

} // namespace lt::detail
