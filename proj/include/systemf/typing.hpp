#ifndef SYSTEMF_TYPING_HPP
#define SYSTEMF_TYPING_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "systemf/ast.hpp"

namespace systemf {

enum class TypeErrorCode {
  variable_not_in_context,
  expected_arrow,
  expected_quantifier,
  type_mismatch_var,
  type_mismatch_abs,
  type_mismatch_spe,
  not_typable,
};

/// Stable identifier, e.g. "type-mismatch-abs".
std::string_view code_name(TypeErrorCode code);

class TypeError : public std::runtime_error {
 public:
  TypeError(TypeErrorCode code, const char* message) : std::runtime_error(message), code_(code) {}
  TypeErrorCode code() const { return code_; }

 private:
  TypeErrorCode code_;
};

/// Typing context: term variables with their types, most recent first.
/// Persistent; extending shares the tail.
class Context {
 public:
  Context() = default;

  Context extend(const TeVariable& x, const Ty& a) const;
  /// Nearest binding of x.
  std::optional<Ty> find(const TeVariable& x) const;
  bool empty() const { return head_ == nullptr; }
  /// Largest key of a bound variable, if any.
  std::optional<bindcore::VarKey> max_key() const;

 private:
  struct Entry {
    TeVariable var;
    Ty type;
    std::shared_ptr<const Entry> next;
  };
  explicit Context(std::shared_ptr<const Entry> head) : head_(std::move(head)) {}
  std::shared_ptr<const Entry> head_;
};

std::optional<Ty> find_ctxt(const TeVariable& x, const Context& ctx);

/// Type synthesis. Throws TypeError.
Ty infer(const Context& ctx, const Te& t);
/// Type analysis. Throws TypeError.
void check(const Context& ctx, const Te& t, const Ty& a);

}  // namespace systemf

#endif  // SYSTEMF_TYPING_HPP
