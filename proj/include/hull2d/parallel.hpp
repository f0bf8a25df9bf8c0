#pragma once

// Two-way work splitting for the data-parallel stages. Every caller's result
// must be independent of whether the split actually happens, so fn(lo, hi)
// may only touch state addressed by its own index range.

#include <cstddef>
#include <thread>

namespace hull2d::detail {

inline constexpr std::size_t kParallelGrain = std::size_t{1} << 15;

inline bool parallel_allowed() {
    return std::thread::hardware_concurrency() > 1;
}

template <typename Fn>
void split2(std::size_t n, Fn&& fn) {
    if (n >= 2 * kParallelGrain && parallel_allowed()) {
        const std::size_t mid = n / 2;
        std::thread half([&] { fn(std::size_t{0}, mid); });
        fn(mid, n);
        half.join();
    } else {
        fn(std::size_t{0}, n);
    }
}

}  // namespace hull2d::detail
