#include "systemf/equality.hpp"

namespace systemf {

using bindcore::eq_binder;
using bindcore::eq_vars;

bool eq_ty(const Ty& a, const Ty& b, EqualityOptions opts) {
  if (opts.identity_shortcut && a.same(b)) return true;
  auto eq = [opts](const Ty& x, const Ty& y) { return eq_ty(x, y, opts); };
  if (auto v1 = a.as<TyVar>()) {
    auto v2 = b.as<TyVar>();
    return v2 && eq_vars(v1->var, v2->var);
  }
  if (auto r1 = a.as<TyArr>()) {
    auto r2 = b.as<TyArr>();
    return r2 && eq(r1->dom, r2->dom) && eq(r1->cod, r2->cod);
  }
  auto f2 = b.as<TyAll>();
  return f2 && eq_binder(eq, std::get<TyAll>(a.node()).body, f2->body);
}

bool eq_te(const Te& t, const Te& u, EqualityOptions opts) {
  if (opts.identity_shortcut && t.same(u)) return true;
  auto eq = [opts](const Te& x, const Te& y) { return eq_te(x, y, opts); };
  if (auto v1 = t.as<TeVar>()) {
    auto v2 = u.as<TeVar>();
    return v2 && eq_vars(v1->var, v2->var);
  }
  if (auto a1 = t.as<TeAbs>()) {
    auto a2 = u.as<TeAbs>();
    return a2 && eq_ty(a1->dom, a2->dom, opts) && eq_binder(eq, a1->body, a2->body);
  }
  if (auto p1 = t.as<TeApp>()) {
    auto p2 = u.as<TeApp>();
    return p2 && eq(p1->fun, p2->fun) && eq(p1->arg, p2->arg);
  }
  if (auto l1 = t.as<TeLam>()) {
    auto l2 = u.as<TeLam>();
    return l2 && eq_binder(eq, l1->body, l2->body);
  }
  const auto& s1 = std::get<TeSpe>(t.node());
  auto s2 = u.as<TeSpe>();
  return s2 && eq(s1.fun, s2->fun) && eq_ty(s1.arg, s2->arg, opts);
}

}  // namespace systemf
