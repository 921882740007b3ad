#include "ssn/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ssn {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
    unsigned n = g_max_threads.load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& f) {
    if (end <= begin) return;
    const std::size_t total = end - begin;
    unsigned workers = max_threads();
    if (workers > total) workers = static_cast<unsigned>(total);

    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) f(i);
        return;
    }

    std::atomic<std::size_t> next{begin};
    std::exception_ptr err;
    std::mutex err_mu;

    auto body = [&] {
        // Chunked grab keeps contention low; chunk size does not affect
        // results because every item is seeded independently.
        const std::size_t chunk = total / (8 * workers) + 1;
        for (;;) {
            const std::size_t lo = next.fetch_add(chunk);
            if (lo >= end) return;
            const std::size_t hi = lo + chunk < end ? lo + chunk : end;
            try {
                for (std::size_t i = lo; i < hi; ++i) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

} // namespace ssn
