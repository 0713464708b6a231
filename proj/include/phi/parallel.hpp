#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace phi {

// Runs body(i) for i in [0, count) on up to `threads` workers. Callers index
// into preallocated result slots, so the thread count never affects output.
template <class F>
void parallel_for(std::uint64_t count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<std::uint64_t>(threads, count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// splitmix64; decorrelates per-instance RNG streams from a base seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace phi
