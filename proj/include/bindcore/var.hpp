#ifndef BINDCORE_VAR_HPP
#define BINDCORE_VAR_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bindcore/box.hpp"

namespace bindcore {

template <class T>
class Var;

/// Injection of a variable into the syntax it ranges over.
template <class T>
using MkFree = std::function<T(const Var<T>&)>;

namespace detail {

struct SplitName {
  std::string prefix;
  std::optional<unsigned> suffix;
};

/// Splits a name into a prefix and the value of its trailing digits.
/// Leading zeros of the digit run stay in the prefix so that rendering the
/// parts gives back the original string.
SplitName split_name(std::string_view name);

std::string render_name(const std::string& prefix, std::optional<unsigned> suffix);

/// Smallest rendering of `prefix` (bare, then 0, 1, ...) not in `taken`.
std::string choose_binder_name(const std::string& prefix, const std::vector<std::string>& taken);

VarKey fresh_key();

template <class T>
class VarInfo final : public AnyVarInfo {
 public:
  VarInfo(VarKey key, SplitName name, MkFree<T> mkfree)
      : AnyVarInfo(key, std::move(name.prefix), name.suffix), mkfree_(std::move(mkfree)) {}

  const MkFree<T>& mkfree() const { return mkfree_; }

  Cell make_free_cell(const AnyVar& self) const override;

 private:
  MkFree<T> mkfree_;
};

}  // namespace detail

/// A free variable ranging over T.
///
/// Immutable once created. Carries its own boxed form, computed eagerly,
/// so box_var is a field read.
template <class T>
class Var {
 public:
  explicit Var(std::shared_ptr<const detail::VarInfo<T>> info)
      : info_(std::move(info)), box_(make_box(info_)) {}

  VarKey key() const { return info_->key(); }
  const std::string& prefix() const { return info_->prefix(); }
  std::optional<unsigned> suffix() const { return info_->suffix(); }
  const std::string& name() const { return info_->name(); }
  const MkFree<T>& mkfree() const { return info_->mkfree(); }

  /// The variable injected into T.
  T make_free() const { return info_->mkfree()(*this); }

  const Box<T>& boxed() const { return box_; }
  AnyVar erased() const { return info_; }

 private:
  static Box<T> make_box(const std::shared_ptr<const detail::VarInfo<T>>& info) {
    const VarKey key = info->key();
    return Box<T>::open({info}, 0, [key](const VarPosMap& vp) -> Phase2<T> {
      const std::size_t slot = vp.slot(key);
      return [slot](const Environment& env) { return env.get<T>(slot); };
    });
  }

  std::shared_ptr<const detail::VarInfo<T>> info_;
  Box<T> box_;
};

template <class T>
Cell detail::VarInfo<T>::make_free_cell(const AnyVar& self) const {
  Var<T> v(std::static_pointer_cast<const VarInfo<T>>(self));
  return Cell::of<T>(mkfree_(v));
}

/// Creates a variable with a fresh key. The name must be non-empty.
template <class T>
Var<T> new_var(MkFree<T> mkfree, std::string_view name) {
  if (name.empty()) throw std::invalid_argument("new_var: empty variable name");
  return Var<T>(std::make_shared<const detail::VarInfo<T>>(detail::fresh_key(), detail::split_name(name),
                                                           std::move(mkfree)));
}

template <class T>
const std::string& name_of(const Var<T>& x) {
  return x.name();
}

template <class T>
bool eq_vars(const Var<T>& x, const Var<T>& y) {
  return x.key() == y.key();
}

template <class T>
const Box<T>& box_var(const Var<T>& x) {
  return x.boxed();
}

template <class A, class T>
bool occur(const Var<A>& x, const Box<T>& b) {
  return occur_key(x.key(), b);
}

}  // namespace bindcore

#endif  // BINDCORE_VAR_HPP
