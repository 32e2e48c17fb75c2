#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lrc::detail {

// Splits [0, count) into contiguous chunks, one per worker, and runs
// body(begin, end, worker) on each. The first exception thrown is rethrown.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
    workers = std::max(1U, workers);
    if (workers == 1 || count < 2 * static_cast<std::size_t>(workers)) {
        body(std::size_t{0}, count, 0U);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace lrc::detail
