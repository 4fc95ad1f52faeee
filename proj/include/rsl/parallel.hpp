#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace rsl {

/// Opaque parallelism capability handed to the search engines by the caller
/// (the CLI owns the choice). workers == 1 is the serial reference execution.
struct Parallelism {
    unsigned workers = 1;

    static Parallelism autodetect() {
        unsigned hw = std::thread::hardware_concurrency();
        return Parallelism{hw ? hw : 1};
    }
};

/// Run fn(i) for i in [0, count) on `workers` threads. Each index is claimed
/// exactly once; results must be deposited into per-index slots so the caller
/// can merge deterministically.
template <typename Fn>
void parallel_branches(unsigned workers, std::size_t count, Fn&& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace rsl
