#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace influencer {

/// Worker count; 0 means one per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs `fn(block, begin, end)` over fixed-size blocks of [0, count).
///
/// Block boundaries depend only on `count` and `block_size`, never on the
/// worker count. Callers that keep one partial result per block and merge
/// them in block order therefore get identical output for any `threads`.
template <class Fn>
void for_each_block(std::size_t count, std::size_t block_size, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    block_size = std::max<std::size_t>(block_size, 1);
    const std::size_t blocks = (count + block_size - 1) / block_size;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), blocks));

    auto run_block = [&](std::size_t b) {
        std::size_t begin = b * block_size;
        fn(b, begin, std::min(count, begin + block_size));
    };

    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) run_block(b);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t b = next++; b < blocks; b = next++) {
                    try {
                        run_block(b);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                        next = blocks;
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

} // namespace influencer
