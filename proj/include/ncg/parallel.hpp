#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ncg {

/// Worker cap: min(hardware, NCG_THREADS). NCG_THREADS=1 forces serial runs.
inline unsigned workerCount() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("NCG_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

/// Parallel map over [0, n). Results must be written to preallocated slots;
/// the caller then reduces them in a fixed order, so output is independent of
/// the thread count.
inline void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body) {
    unsigned workers = workerCount();
    if (workers <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

/// Pairwise (tree) summation over a term vector. Fixed association order, so
/// the result is bit-identical no matter how the terms were produced.
template <typename T>
T pairwiseSum(std::vector<T> terms) {
    if (terms.empty()) throw std::invalid_argument("pairwiseSum: empty");
    std::size_t n = terms.size();
    while (n > 1) {
        std::size_t half = n / 2;
        for (std::size_t i = 0; i < half; ++i) terms[i] = terms[2 * i] + terms[2 * i + 1];
        if (n % 2) {
            terms[half] = terms[n - 1];
            n = half + 1;
        } else {
            n = half;
        }
    }
    return terms[0];
}

}  // namespace ncg
