#include "systemf/ast.hpp"

#include "bindcore/combinators.hpp"

namespace systemf {

using bindcore::Binder;
using bindcore::Box;

Ty Ty::var(const TyVariable& x) { return Ty(std::make_shared<const Node>(TyVar{x})); }
Ty Ty::arr(Ty dom, Ty cod) {
  return Ty(std::make_shared<const Node>(TyArr{std::move(dom), std::move(cod)}));
}
Ty Ty::all(Binder<Ty, Ty> body) { return Ty(std::make_shared<const Node>(TyAll{std::move(body)})); }

Te Te::var(const TeVariable& x) { return Te(std::make_shared<const Node>(TeVar{x})); }
Te Te::abs(Ty dom, Binder<Te, Te> body) {
  return Te(std::make_shared<const Node>(TeAbs{std::move(dom), std::move(body)}));
}
Te Te::app(Te fun, Te arg) {
  return Te(std::make_shared<const Node>(TeApp{std::move(fun), std::move(arg)}));
}
Te Te::lam(Binder<Ty, Te> body) { return Te(std::make_shared<const Node>(TeLam{std::move(body)})); }
Te Te::spe(Te fun, Ty arg) {
  return Te(std::make_shared<const Node>(TeSpe{std::move(fun), std::move(arg)}));
}

TyVariable new_ty_var(std::string_view name) {
  return bindcore::new_var<Ty>([](const TyVariable& x) { return Ty::var(x); }, name);
}

TeVariable new_te_var(std::string_view name) {
  return bindcore::new_var<Te>([](const TeVariable& x) { return Te::var(x); }, name);
}

namespace smart {

TyBox ty_var(const TyVariable& x) { return bindcore::box_var(x); }

TyBox ty_arr(const TyBox& dom, const TyBox& cod) {
  return bindcore::box_apply2([](const Ty& a, const Ty& b) { return Ty::arr(a, b); }, dom, cod);
}

TyBox ty_all(const Box<Binder<Ty, Ty>>& body) {
  return bindcore::box_apply([](const Binder<Ty, Ty>& f) { return Ty::all(f); }, body);
}

TeBox te_var(const TeVariable& x) { return bindcore::box_var(x); }

TeBox te_abs(const TyBox& dom, const Box<Binder<Te, Te>>& body) {
  return bindcore::box_apply2([](const Ty& a, const Binder<Te, Te>& f) { return Te::abs(a, f); },
                              dom, body);
}

TeBox te_app(const TeBox& fun, const TeBox& arg) {
  return bindcore::box_apply2([](const Te& t, const Te& u) { return Te::app(t, u); }, fun, arg);
}

TeBox te_lam(const Box<Binder<Ty, Te>>& body) {
  return bindcore::box_apply([](const Binder<Ty, Te>& f) { return Te::lam(f); }, body);
}

TeBox te_spe(const TeBox& fun, const TyBox& arg) {
  return bindcore::box_apply2([](const Te& t, const Ty& a) { return Te::spe(t, a); }, fun, arg);
}

}  // namespace smart

TyBox lift_ty(const Ty& a) {
  if (auto v = a.as<TyVar>()) return smart::ty_var(v->var);
  if (auto arr = a.as<TyArr>()) return smart::ty_arr(lift_ty(arr->dom), lift_ty(arr->cod));
  const auto& all = std::get<TyAll>(a.node());
  return smart::ty_all(bindcore::box_binder(lift_ty, all.body));
}

TeBox lift_te(const Te& t) {
  return std::visit(
      [](const auto& n) -> TeBox {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, TeVar>) {
          return smart::te_var(n.var);
        } else if constexpr (std::is_same_v<N, TeAbs>) {
          return smart::te_abs(lift_ty(n.dom), bindcore::box_binder(lift_te, n.body));
        } else if constexpr (std::is_same_v<N, TeApp>) {
          return smart::te_app(lift_te(n.fun), lift_te(n.arg));
        } else if constexpr (std::is_same_v<N, TeLam>) {
          return smart::te_lam(bindcore::box_binder(lift_te, n.body));
        } else {
          return smart::te_spe(lift_te(n.fun), lift_ty(n.arg));
        }
      },
      t.node());
}

}  // namespace systemf
