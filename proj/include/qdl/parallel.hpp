// Deterministic data-parallel helpers: block-partitioned parallel_for with
// results written by index, and pairwise summation so reductions do not depend
// on the worker count.

#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace qdl {

inline int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
    if (threads < 1) threads = 1;
    if (threads == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

// Pairwise (cascade) summation; deterministic for a fixed input order.
template <class T>
T pairwise_sum(const std::vector<T>& v) {
    struct Rec {
        static T sum(const T* p, std::size_t n) {
            if (n == 0) return T(0);
            if (n <= 8) {
                T s = p[0];
                for (std::size_t i = 1; i < n; ++i) s += p[i];
                return s;
            }
            std::size_t h = n / 2;
            return sum(p, h) + sum(p + h, n - h);
        }
    };
    return Rec::sum(v.data(), v.size());
}

}  // namespace qdl
