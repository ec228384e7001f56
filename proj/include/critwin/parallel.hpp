#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace critwin {

// Splits [0, total) into contiguous chunks, runs fn(begin, end) for each on
// up to `workers` threads and returns the results in chunk order, so any
// reduction over the vector is independent of scheduling. The first
// exception thrown by a chunk is rethrown.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::uint64_t total, int workers, Fn fn, std::uint64_t chunk_size = 0)
{
    workers = std::max(1, workers);
    if (chunk_size == 0)
        chunk_size = std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(workers) * 8));
    const std::uint64_t chunks = total == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
    std::vector<Result> results(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto work = [&] {
        while (true) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks)
                return;
            try {
                const std::uint64_t begin = c * chunk_size;
                results[c] = fn(begin, std::min(total, begin + chunk_size));
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure)
                    failure = std::current_exception();
                next = chunks;
            }
        }
    };
    const int threads = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunks));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

} // namespace critwin
