#ifndef MSC_PARALLEL_HPP
#define MSC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace msc {

/// Runs body(i) for i in [0, n) across the given number of threads with a
/// static block partition. Results must be written to per-index slots so
/// the outcome is identical for every thread count.
template <class F>
void parallel_for_ordered(std::size_t n, unsigned threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < n; i += workers) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace msc

#endif
