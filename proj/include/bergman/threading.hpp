#pragma once

#include <cstddef>
#include <future>
#include <numeric>
#include <vector>

namespace bergman {

/// Set the worker count used by integral sums. 1 = serial (the default,
/// bit-reproducible); 0 = hardware concurrency.
void set_max_threads(int n);
int max_threads();

namespace detail {

/// Sum of term(i) for i in [0, n). When threads > 1 the index range is
/// split into contiguous chunks whose partial sums are combined in chunk
/// order, so the result is deterministic for a fixed thread count (it may
/// differ from the serial sum by floating-point reassociation only).
template <typename Term>
double parallel_sum(std::size_t n, Term&& term) {
    const std::size_t threads = static_cast<std::size_t>(max_threads());
    if (threads <= 1 || n < 2 * threads) {
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) acc += term(i);
        return acc;
    }
    const std::size_t chunk = (n + threads - 1) / threads;
    std::vector<std::future<double>> parts;
    parts.reserve(threads);
    for (std::size_t lo = 0; lo < n; lo += chunk) {
        const std::size_t hi = std::min(n, lo + chunk);
        parts.push_back(std::async(std::launch::async, [lo, hi, &term] {
            double acc = 0.0;
            for (std::size_t i = lo; i < hi; ++i) acc += term(i);
            return acc;
        }));
    }
    double acc = 0.0;
    for (auto& part : parts) acc += part.get();
    return acc;
}

} // namespace detail
} // namespace bergman
