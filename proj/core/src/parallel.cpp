#include "bent3/parallel.hpp"

#include <atomic>

namespace bent3 {

namespace {
std::atomic<unsigned> g_threads{1};
}

unsigned default_threads() noexcept { return g_threads.load(std::memory_order_relaxed); }

void set_default_threads(unsigned threads) noexcept { g_threads.store(threads == 0 ? 1 : threads); }

}  // namespace bent3
