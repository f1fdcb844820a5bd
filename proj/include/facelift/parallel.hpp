// Block-parallel loop over path indices.  Work is dealt in fixed-size blocks
// through an atomic cursor; callers store per-block results and reduce them
// serially in block order, keeping outputs independent of the worker count.
// FACELIFT_THREADS caps the pool.

#ifndef FACELIFT_PARALLEL_HPP
#define FACELIFT_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace facelift {

constexpr std::size_t kPathBlock = 4096;

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FACELIFT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && (unsigned long)v < 256) hw = (unsigned)v;
    }
    return hw;
}

inline std::size_t block_count(std::size_t n_items, std::size_t block = kPathBlock) {
    return (n_items + block - 1) / block;
}

// fn(block_index, begin, end) with [begin,end) a path range.
inline void for_each_block(std::size_t n_items, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn,
                           std::size_t block = kPathBlock) {
    const std::size_t nblocks = block_count(n_items, block);
    const unsigned nthreads = std::min<std::size_t>(worker_count(), nblocks);
    if (nthreads <= 1) {
        for (std::size_t b = 0; b < nblocks; ++b)
            fn(b, b * block, std::min(n_items, (b + 1) * block));
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t b = cursor.fetch_add(1);
            if (b >= nblocks) return;
            fn(b, b * block, std::min(n_items, (b + 1) * block));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace facelift

#endif
