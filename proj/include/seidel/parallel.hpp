#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace seidel {

/// Worker count from SEIDEL_FORGE_THREADS, falling back to 1.
inline unsigned default_threads() {
    if (const char* env = std::getenv("SEIDEL_FORGE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    return 1;
}

/// Splits [0, count) into `threads` contiguous chunks and runs
/// fn(worker, begin, end) on each. Chunk boundaries depend only on
/// count and threads, so per-chunk results can be merged in worker order.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1U, threads);
    if (threads == 1 || count < 2) {
        fn(0U, std::uint64_t{0}, count);
        return;
    }
    const std::uint64_t chunk = (count + threads - 1) / threads;
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = std::min(count, w * chunk);
        const std::uint64_t end = std::min(count, begin + chunk);
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace seidel
