#include "ectff/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ectff {

namespace {

int default_budget() {
    if (const char* env = std::getenv("ECTFF_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

int g_budget = default_budget();

}  // namespace

int thread_budget() { return g_budget; }

void set_thread_budget(int n) { g_budget = n >= 1 ? n : 1; }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    int budget = g_budget;
    if (budget <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>({static_cast<std::size_t>(budget),
                                                 hw ? hw : 1, n});
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace ectff
