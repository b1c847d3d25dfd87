#ifndef BINDCORE_COMBINATORS_HPP
#define BINDCORE_COMBINATORS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "bindcore/box.hpp"

namespace bindcore {

// Liftings derived from box and apply_box. box_apply and box_apply2 are
// written out directly so that the produced closures do not build partial
// applications at substitution time; they agree with
//   apply_box(box(f), a)  and  apply_box(apply_box(box(curry(f)), a), b).

/// `f` must not contain library variables.
template <class F, class A>
auto box_apply(F f, const Box<A>& a) -> Box<std::invoke_result_t<const F&, const A&>> {
  using R = std::invoke_result_t<const F&, const A&>;
  if (a.is_closed()) return Box<R>::closed(std::invoke(f, a.value()));
  const auto& ao = a.open();
  return Box<R>::open(ao.vars, ao.bound_count,
                      [f = std::move(f), p1 = ao.phase1](const VarPosMap& vp) -> Phase2<R> {
                        return [f, p2 = p1(vp)](const Environment& env) {
                          return std::invoke(f, p2(env));
                        };
                      });
}

template <class F, class A, class B>
auto box_apply2(F f, const Box<A>& a, const Box<B>& b)
    -> Box<std::invoke_result_t<const F&, const A&, const B&>> {
  using R = std::invoke_result_t<const F&, const A&, const B&>;
  if (a.is_closed() && b.is_closed()) return Box<R>::closed(std::invoke(f, a.value(), b.value()));
  if (a.is_closed()) {
    const auto& bo = b.open();
    return Box<R>::open(
        bo.vars, bo.bound_count,
        [f = std::move(f), av = a.value(), p1 = bo.phase1](const VarPosMap& vp) -> Phase2<R> {
          return [f, av, p2 = p1(vp)](const Environment& env) { return std::invoke(f, av, p2(env)); };
        });
  }
  if (b.is_closed()) {
    const auto& ao = a.open();
    return Box<R>::open(
        ao.vars, ao.bound_count,
        [f = std::move(f), bv = b.value(), p1 = ao.phase1](const VarPosMap& vp) -> Phase2<R> {
          return [f, bv, p2 = p1(vp)](const Environment& env) { return std::invoke(f, p2(env), bv); };
        });
  }
  const auto& ao = a.open();
  const auto& bo = b.open();
  return Box<R>::open(
      detail::merge_vars(ao.vars, bo.vars), std::max(ao.bound_count, bo.bound_count),
      [f = std::move(f), pa = ao.phase1, pb = bo.phase1](const VarPosMap& vp) -> Phase2<R> {
        return [f, a2 = pa(vp), b2 = pb(vp)](const Environment& env) {
          return std::invoke(f, a2(env), b2(env));
        };
      });
}

template <class A>
Box<std::optional<A>> box_opt(const std::optional<Box<A>>& o) {
  if (!o) return Box<std::optional<A>>::closed(std::nullopt);
  return box_apply([](const A& e) { return std::optional<A>(e); }, *o);
}

/// Right fold of cons over the list, starting from the boxed empty list.
template <class A>
Box<std::vector<A>> box_list(const std::vector<Box<A>>& l) {
  Box<std::vector<A>> acc = Box<std::vector<A>>::closed({});
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    acc = box_apply2(
        [](const A& x, const std::vector<A>& xs) {
          std::vector<A> out;
          out.reserve(xs.size() + 1);
          out.push_back(x);
          out.insert(out.end(), xs.begin(), xs.end());
          return out;
        },
        *it, acc);
  }
  return acc;
}

}  // namespace bindcore

#endif  // BINDCORE_COMBINATORS_HPP
