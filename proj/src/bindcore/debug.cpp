#include "bindcore/debug.hpp"

#include <atomic>
#include <cstdlib>

namespace bindcore::debug {

namespace {

// -1: not yet read from the environment.
std::atomic<int> g_state{-1};
std::atomic<std::uint64_t> g_lookups{0};
std::atomic<std::uint64_t> g_subst_calls{0};
std::atomic<std::uint64_t> g_subst_lookups{0};

}  // namespace

bool enabled() {
  int s = g_state.load(std::memory_order_relaxed);
  if (s < 0) {
    const char* env = std::getenv("BINDCORE_DEBUG");
    s = (env != nullptr && *env != '\0') ? 1 : 0;
    int expected = -1;
    g_state.compare_exchange_strong(expected, s, std::memory_order_relaxed);
    s = g_state.load(std::memory_order_relaxed);
  }
  return s == 1;
}

void set_enabled(bool on) { g_state.store(on ? 1 : 0, std::memory_order_relaxed); }

std::uint64_t phase1_lookups() { return g_lookups.load(std::memory_order_relaxed); }

void count_lookup() {
  if (enabled()) g_lookups.fetch_add(1, std::memory_order_relaxed);
}

std::uint64_t subst_calls() { return g_subst_calls.load(std::memory_order_relaxed); }
std::uint64_t subst_lookups() { return g_subst_lookups.load(std::memory_order_relaxed); }

void record_subst(std::uint64_t lookups) {
  g_subst_calls.fetch_add(1, std::memory_order_relaxed);
  g_subst_lookups.fetch_add(lookups, std::memory_order_relaxed);
}

}  // namespace bindcore::debug
