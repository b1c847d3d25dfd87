#ifndef CLI_STACK_HPP
#define CLI_STACK_HPP

#include <cstddef>
#include <functional>

namespace cli {

/// Default stack for deep terms (Church numerals in the tens of thousands).
inline constexpr std::size_t big_stack = std::size_t{1} << 30;

/// Runs fn on a fresh thread with the given stack size and waits for it.
/// Exceptions thrown by fn are rethrown in the caller.
void run_with_stack(std::size_t bytes, const std::function<void()>& fn);

}  // namespace cli

#endif  // CLI_STACK_HPP
