#ifndef BINDCORE_BOX_HPP
#define BINDCORE_BOX_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "bindcore/debug.hpp"
#include "bindcore/environment.hpp"
#include "bindcore/varpos.hpp"

namespace bindcore {

class AnyVarInfo;
using AnyVar = std::shared_ptr<const AnyVarInfo>;

/// Type-erased part of a variable: identity and name.
class AnyVarInfo {
 public:
  AnyVarInfo(VarKey key, std::string prefix, std::optional<unsigned> suffix);
  virtual ~AnyVarInfo() = default;

  VarKey key() const { return key_; }
  const std::string& prefix() const { return prefix_; }
  std::optional<unsigned> suffix() const { return suffix_; }
  /// Prefix followed by the decimal suffix, if any.
  const std::string& name() const { return name_; }

  /// The variable injected into its own syntax, wrapped as an environment cell.
  virtual Cell make_free_cell(const AnyVar& self) const = 0;

 private:
  VarKey key_;
  std::string prefix_;
  std::optional<unsigned> suffix_;
  std::string name_;
};

template <class Sig>
class SharedFn;

/// Immutable function object whose copies share one callable. Closures
/// capture the closures of their subterms, so a by-value std::function
/// would copy the whole tree on every capture.
template <class R, class... Args>
class SharedFn<R(Args...)> {
 public:
  SharedFn() = default;

  template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, SharedFn> &&
                                              std::is_invocable_r_v<R, const std::decay_t<F>&, Args...>>>
  SharedFn(F&& f) : fn_(std::make_shared<const std::function<R(Args...)>>(std::forward<F>(f))) {}

  R operator()(Args... args) const { return (*fn_)(std::forward<Args>(args)...); }
  explicit operator bool() const { return fn_ != nullptr; }

 private:
  std::shared_ptr<const std::function<R(Args...)>> fn_;
};

/// Second phase of a closure: reads slots of an environment.
template <class T>
using Phase2 = SharedFn<T(const Environment&)>;

/// First phase of a closure: resolves variable keys to slots.
template <class T>
using Phase1 = SharedFn<Phase2<T>(const VarPosMap&)>;

/// A value of type T under construction.
///
/// Either closed (no free variables) or open, in which case it records its
/// free variables sorted by key, the number of environment slots reserved for
/// variables bound so far, and a two-phase closure producing the value.
template <class T>
class Box {
 public:
  struct Open {
    std::vector<AnyVar> vars;
    std::size_t bound_count;
    Phase1<T> phase1;
  };

  static Box closed(T value) {
    return Box(std::make_shared<const Node>(std::in_place_index<0>, std::move(value)));
  }

  static Box open(std::vector<AnyVar> vars, std::size_t bound_count, Phase1<T> phase1) {
    if (vars.empty()) throw std::logic_error("Box::open: empty variable list");
    if (debug::enabled()) {
      for (std::size_t i = 1; i < vars.size(); ++i) {
        if (vars[i - 1]->key() >= vars[i]->key()) {
          throw std::logic_error("Box::open: variable list not strictly sorted by key");
        }
      }
    }
    return Box(std::make_shared<const Node>(
        std::in_place_index<1>, Open{std::move(vars), bound_count, std::move(phase1)}));
  }

  bool is_closed() const { return node_->index() == 0; }
  const T& value() const { return std::get<0>(*node_); }
  const Open& open() const { return std::get<1>(*node_); }

  /// Free variables, sorted by key. Empty for closed boxes.
  const std::vector<AnyVar>& vars() const {
    static const std::vector<AnyVar> none;
    return is_closed() ? none : open().vars;
  }
  std::size_t bound_count() const { return is_closed() ? 0 : open().bound_count; }

  /// True when both handles refer to the same box object.
  bool identical(const Box& other) const { return node_ == other.node_; }

 private:
  using Node = std::variant<T, Open>;
  explicit Box(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Injects a value without library variables.
template <class T>
Box<std::decay_t<T>> box(T&& value) {
  return Box<std::decay_t<T>>::closed(std::forward<T>(value));
}

template <class T>
bool is_closed(const Box<T>& b) {
  return b.is_closed();
}

template <class T>
const std::vector<AnyVar>& free_vars(const Box<T>& b) {
  return b.vars();
}

/// Whether the variable with this key is free in the box.
template <class T>
bool occur_key(VarKey key, const Box<T>& b) {
  const auto& vs = b.vars();
  auto it = std::lower_bound(vs.begin(), vs.end(), key,
                             [](const AnyVar& v, VarKey k) { return v->key() < k; });
  return it != vs.end() && (*it)->key() == key;
}

namespace detail {

std::vector<AnyVar> merge_vars(const std::vector<AnyVar>& a, const std::vector<AnyVar>& b);

}  // namespace detail

/// Applicative application: a boxed function applied to a boxed argument.
template <class F, class A>
auto apply_box(const Box<F>& f, const Box<A>& a) -> Box<std::invoke_result_t<const F&, const A&>> {
  using R = std::invoke_result_t<const F&, const A&>;
  if (f.is_closed() && a.is_closed()) return Box<R>::closed(std::invoke(f.value(), a.value()));
  if (f.is_closed()) {
    const auto& ao = a.open();
    return Box<R>::open(ao.vars, ao.bound_count,
                        [fv = f.value(), p1 = ao.phase1](const VarPosMap& vp) -> Phase2<R> {
                          return [fv, p2 = p1(vp)](const Environment& env) {
                            return std::invoke(fv, p2(env));
                          };
                        });
  }
  if (a.is_closed()) {
    const auto& fo = f.open();
    return Box<R>::open(fo.vars, fo.bound_count,
                        [av = a.value(), p1 = fo.phase1](const VarPosMap& vp) -> Phase2<R> {
                          return [av, p2 = p1(vp)](const Environment& env) {
                            return std::invoke(p2(env), av);
                          };
                        });
  }
  const auto& fo = f.open();
  const auto& ao = a.open();
  return Box<R>::open(detail::merge_vars(fo.vars, ao.vars),
                      std::max(fo.bound_count, ao.bound_count),
                      [fp = fo.phase1, ap = ao.phase1](const VarPosMap& vp) -> Phase2<R> {
                        return [f2 = fp(vp), a2 = ap(vp)](const Environment& env) {
                          return std::invoke(f2(env), a2(env));
                        };
                      });
}

/// Finalizes a box. Its free variables stay free: each one is injected into
/// its own slot with the variable's own constructor.
template <class T>
T unbox(const Box<T>& b) {
  if (b.is_closed()) return b.value();
  const auto& o = b.open();
  VarPosMap vp;
  for (std::size_t i = 0; i < o.vars.size(); ++i) {
    vp.push_back(o.vars[i]->key(), o.bound_count + i, o.vars[i]->name());
  }
  Phase2<T> eval = o.phase1(vp);
  Environment env(o.bound_count + o.vars.size());
  for (std::size_t i = 0; i < o.vars.size(); ++i) {
    env.set_cell(o.bound_count + i, o.vars[i]->make_free_cell(o.vars[i]));
  }
  return eval(env);
}

}  // namespace bindcore

#endif  // BINDCORE_BOX_HPP
