#include "oacodes/threads.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace oacodes {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n > 0 ? n : 0); }

int thread_count() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_chunks(int64_t total, const std::function<void(int64_t, int64_t)>& fn) {
    const int workers = std::min<int64_t>(thread_count(), std::max<int64_t>(total, 1));
    if (workers <= 1 || total < 2) {
        fn(0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int64_t step = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int64_t b = w * step;
        const int64_t e = std::min(total, b + step);
        if (b >= e) break;
        pool.emplace_back(fn, b, e);
    }
    for (auto& t : pool) t.join();
}

}  // namespace oacodes
