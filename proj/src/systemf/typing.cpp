#include "systemf/typing.hpp"

#include <cassert>

#include "systemf/equality.hpp"

namespace systemf {

using bindcore::bind_var;
using bindcore::subst;
using bindcore::unbind;
using bindcore::unbind2;
using bindcore::unbox;

std::string_view code_name(TypeErrorCode code) {
  switch (code) {
    case TypeErrorCode::variable_not_in_context: return "variable-not-in-context";
    case TypeErrorCode::expected_arrow: return "expected-arrow";
    case TypeErrorCode::expected_quantifier: return "expected-quantifier";
    case TypeErrorCode::type_mismatch_var: return "type-mismatch-var";
    case TypeErrorCode::type_mismatch_abs: return "type-mismatch-abs";
    case TypeErrorCode::type_mismatch_spe: return "type-mismatch-spe";
    case TypeErrorCode::not_typable: return "not-typable";
  }
  return "unknown";
}

Context Context::extend(const TeVariable& x, const Ty& a) const {
  return Context(std::make_shared<const Entry>(Entry{x, a, head_}));
}

std::optional<Ty> Context::find(const TeVariable& x) const {
  for (const Entry* e = head_.get(); e != nullptr; e = e->next.get()) {
    if (bindcore::eq_vars(e->var, x)) return e->type;
  }
  return std::nullopt;
}

std::optional<bindcore::VarKey> Context::max_key() const {
  std::optional<bindcore::VarKey> best;
  for (const Entry* e = head_.get(); e != nullptr; e = e->next.get()) {
    if (!best || e->var.key() > *best) best = e->var.key();
  }
  return best;
}

std::optional<Ty> find_ctxt(const TeVariable& x, const Context& ctx) { return ctx.find(x); }

Ty infer(const Context& ctx, const Te& t) {
  if (auto v = t.as<TeVar>()) {
    auto a = ctx.find(v->var);
    if (!a) throw TypeError(TypeErrorCode::variable_not_in_context, "[infer] variable not in context...");
    return *a;
  }
  if (auto abs = t.as<TeAbs>()) {
    auto [x, body] = unbind(abs->body);
    Ty b = infer(ctx.extend(x, abs->dom), body);
    return Ty::arr(abs->dom, b);
  }
  if (auto app = t.as<TeApp>()) {
    Ty f = infer(ctx, app->fun);
    auto arr = f.as<TyArr>();
    if (!arr) throw TypeError(TypeErrorCode::expected_arrow, "[infer] expected arrow type...");
    check(ctx, app->arg, arr->dom);
    return arr->cod;
  }
  if (auto lam = t.as<TeLam>()) {
    auto [x, body] = unbind(lam->body);
    // The fresh type variable cannot occur in the context.
    assert(!ctx.max_key() || x.key() > *ctx.max_key());
    Ty a = infer(ctx, body);
    return Ty::all(unbox(bind_var(x, lift_ty(a))));
  }
  const auto& spe = std::get<TeSpe>(t.node());
  Ty f = infer(ctx, spe.fun);
  auto all = f.as<TyAll>();
  if (!all) throw TypeError(TypeErrorCode::expected_quantifier, "[infer] expected quantifier...");
  return subst(all->body, spe.arg);
}

void check(const Context& ctx, const Te& t, const Ty& a) {
  if (auto v = t.as<TeVar>()) {
    auto b = ctx.find(v->var);
    if (!b) throw TypeError(TypeErrorCode::variable_not_in_context, "[check] variable not in context...");
    if (!eq_ty(*b, a)) throw TypeError(TypeErrorCode::type_mismatch_var, "[check] type mismatch... (var)");
    return;
  }
  if (auto abs = t.as<TeAbs>()) {
    if (auto arr = a.as<TyArr>()) {
      if (!eq_ty(abs->dom, arr->dom)) {
        throw TypeError(TypeErrorCode::type_mismatch_abs, "[check] type mismatch... (abs)");
      }
      auto [x, body] = unbind(abs->body);
      check(ctx.extend(x, arr->dom), body, arr->cod);
      return;
    }
  } else if (auto app = t.as<TeApp>()) {
    Ty dom = infer(ctx, app->arg);
    check(ctx, app->fun, Ty::arr(dom, a));
    return;
  } else if (auto lam = t.as<TeLam>()) {
    if (auto all = a.as<TyAll>()) {
      auto [x, body, ty] = unbind2(lam->body, all->body);
      check(ctx, body, ty);
      return;
    }
  } else if (auto spe = t.as<TeSpe>()) {
    Ty f = infer(ctx, spe->fun);
    auto all = f.as<TyAll>();
    if (!all) throw TypeError(TypeErrorCode::expected_quantifier, "[infer] expected quantifier...");
    if (!eq_ty(subst(all->body, spe->arg), a)) {
      throw TypeError(TypeErrorCode::type_mismatch_spe, "[check] type mismatch... (spe)");
    }
    return;
  }
  throw TypeError(TypeErrorCode::not_typable, "[check] not typable...");
}

}  // namespace systemf
