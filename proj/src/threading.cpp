#include "bergman/threading.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace bergman {

namespace {
std::atomic<int> g_max_threads{1};
}

void set_max_threads(int n) {
    if (n < 0) throw std::invalid_argument("set_max_threads: n must be >= 0");
    if (n == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        n = hw == 0 ? 1 : static_cast<int>(hw);
    }
    g_max_threads.store(n, std::memory_order_relaxed);
}

int max_threads() { return g_max_threads.load(std::memory_order_relaxed); }

} // namespace bergman
