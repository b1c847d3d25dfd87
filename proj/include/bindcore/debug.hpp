#ifndef BINDCORE_DEBUG_HPP
#define BINDCORE_DEBUG_HPP

#include <cstdint>

// Runtime instrumentation for the binding core.
//
// Enabled when the BINDCORE_DEBUG environment variable is set to a non-empty
// value, or explicitly through set_enabled(). When enabled:
//   - every VarPosMap lookup increments a process-wide counter;
//   - environment reads check the type tag of the slot they read;
//   - variable lists of open boxes are checked for strict key order;
//   - subst records how many lookups happened while it ran.
namespace bindcore::debug {

bool enabled();
void set_enabled(bool on);

std::uint64_t phase1_lookups();
void count_lookup();

/// Number of subst calls made while enabled.
std::uint64_t subst_calls();
/// VarPosMap lookups performed inside those calls, summed.
std::uint64_t subst_lookups();
void record_subst(std::uint64_t lookups);

}  // namespace bindcore::debug

#endif  // BINDCORE_DEBUG_HPP
