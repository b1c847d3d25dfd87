#ifndef BINDCORE_BINDER_HPP
#define BINDCORE_BINDER_HPP

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bindcore/box.hpp"
#include "bindcore/debug.hpp"
#include "bindcore/var.hpp"

namespace bindcore {

/// A value of type A bound in a value of type B, represented by its
/// substitution function.
template <class A, class B>
class Binder {
 public:
  using Value = std::function<B(const A&)>;

  Binder(std::string name, bool occurs, std::size_t rank, MkFree<A> mkfree, Value value)
      : data_(std::make_shared<const Data>(
            Data{std::move(name), occurs, rank, std::move(mkfree), std::move(value)})) {}

  /// Name of the bound variable.
  const std::string& name() const { return data_->name; }
  /// Whether the bound variable occurs in the body.
  bool occurs() const { return data_->occurs; }
  /// Number of free variables the body had when the binder was formed.
  std::size_t rank() const { return data_->rank; }
  const MkFree<A>& mkfree() const { return data_->mkfree; }

  B operator()(const A& arg) const { return data_->value(arg); }

  bool identical(const Binder& other) const { return data_ == other.data_; }

 private:
  struct Data {
    std::string name;
    bool occurs;
    std::size_t rank;
    MkFree<A> mkfree;
    Value value;
  };
  std::shared_ptr<const Data> data_;
};

struct BinderInfo {
  std::string name;
  bool occurs;
  std::size_t rank;
};

template <class A, class B>
BinderInfo binder_info(const Binder<A, B>& b) {
  return BinderInfo{b.name(), b.occurs(), b.rank()};
}

template <class A, class B>
B subst(const Binder<A, B>& b, const A& arg) {
  if (!debug::enabled()) return b(arg);
  const std::uint64_t before = debug::phase1_lookups();
  B r = b(arg);
  debug::record_subst(debug::phase1_lookups() - before);
  return r;
}

namespace detail {

inline std::vector<std::string> names_in(const VarPosMap& vp, const std::vector<AnyVar>& vars) {
  std::vector<std::string> out;
  out.reserve(vars.size());
  for (const auto& v : vars) out.push_back(vp.name(v->key()));
  return out;
}

}  // namespace detail

/// Binds `x` in `b`.
///
/// The binder's name keeps the prefix of `x` and takes the smallest suffix
/// whose rendering differs from every other variable free in the body, as
/// those variables are named in the scope where the binder is materialized.
template <class A, class B>
Box<Binder<A, B>> bind_var(const Var<A>& x, const Box<B>& b) {
  using R = Binder<A, B>;
  const std::string& prefix = x.prefix();
  MkFree<A> mkfree = x.mkfree();

  if (b.is_closed()) {
    B v = b.value();
    std::string name = detail::choose_binder_name(prefix, {});
    return Box<R>::closed(R(std::move(name), false, 0, std::move(mkfree), [v](const A&) { return v; }));
  }

  const auto& o = b.open();
  const VarKey key = x.key();
  auto pos = std::lower_bound(o.vars.begin(), o.vars.end(), key,
                              [](const AnyVar& v, VarKey k) { return v->key() < k; });

  if (pos == o.vars.end() || (*pos)->key() != key) {
    // x does not occur: constant binder, materialized in the enclosing scope.
    const std::size_t rank = o.vars.size();
    return Box<R>::open(
        o.vars, o.bound_count,
        [vars = o.vars, p1 = o.phase1, prefix, mkfree, rank](const VarPosMap& vp) -> Phase2<R> {
          std::string name = detail::choose_binder_name(prefix, detail::names_in(vp, vars));
          return [body = p1(vp), name, mkfree, rank](const Environment& env) {
            B v = body(env);
            return R(name, false, rank, mkfree, [v](const A&) { return v; });
          };
        });
  }

  const std::size_t slot = o.bound_count;

  if (o.vars.size() == 1) {
    // x is the last free variable: the binder is closed.
    std::string name = detail::choose_binder_name(prefix, {});
    VarPosMap vp;
    vp.push_back(key, slot, name);
    Phase2<B> body = o.phase1(vp);
    const std::size_t size = slot + 1;
    return Box<R>::closed(R(std::move(name), true, 0, std::move(mkfree),
                            [body, slot, size](const A& arg) {
                              Environment env(size);
                              env.set<A>(slot, arg);
                              return body(env);
                            }));
  }

  // x occurs among others: reserve one more slot for it.
  std::vector<AnyVar> rest;
  rest.reserve(o.vars.size() - 1);
  rest.insert(rest.end(), o.vars.begin(), pos);
  rest.insert(rest.end(), pos + 1, o.vars.end());
  const std::size_t rank = rest.size();
  return Box<R>::open(
      rest, slot + 1,
      [rest, p1 = o.phase1, prefix, key, slot, mkfree, rank](const VarPosMap& vp) -> Phase2<R> {
        std::string name = detail::choose_binder_name(prefix, detail::names_in(vp, rest));
        Phase2<B> body = p1(vp.with(key, slot, name));
        return [body, name, slot, mkfree, rank](const Environment& env) {
          return R(name, true, rank, mkfree, [env, body, slot](const A& arg) {
            Environment local = env.copy();
            local.set<A>(slot, arg);
            return body(local);
          });
        };
      });
}

/// Substitutes a fresh variable named after the binder.
template <class A, class B>
std::pair<Var<A>, B> unbind(const Binder<A, B>& b) {
  Var<A> x = new_var<A>(b.mkfree(), b.name());
  B body = b(x.make_free());
  return {std::move(x), std::move(body)};
}

/// One fresh variable substituted into both binders; named after the first.
template <class A, class B, class C>
std::tuple<Var<A>, B, C> unbind2(const Binder<A, B>& b1, const Binder<A, C>& b2) {
  Var<A> x = new_var<A>(b1.mkfree(), b1.name());
  A arg = x.make_free();
  B t = b1(arg);
  C u = b2(arg);
  return {std::move(x), std::move(t), std::move(u)};
}

template <class A, class B, class Eq>
bool eq_binder(Eq&& eq, const Binder<A, B>& b1, const Binder<A, B>& b2) {
  Var<A> x = new_var<A>(b1.mkfree(), b1.name());
  A arg = x.make_free();
  return eq(b1(arg), b2(arg));
}

/// Lifts a binder back into a box, given a lifting function for its body.
/// Binders formed over closed bodies are boxed as they are.
template <class A, class B, class Lift>
Box<Binder<A, B>> box_binder(Lift&& lift, const Binder<A, B>& b) {
  if (b.rank() == 0) return Box<Binder<A, B>>::closed(b);
  auto [x, body] = unbind(b);
  return bind_var(x, lift(body));
}

}  // namespace bindcore

#endif  // BINDCORE_BINDER_HPP
