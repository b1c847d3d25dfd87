#include "oracle/convert.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

using bindcore::bind_var;
using bindcore::unbind;
using bindcore::unbox;
using namespace systemf;

std::string qualified_name(const std::string& name, bindcore::VarKey key) {
  return name + "#" + std::to_string(key);
}

namespace {

template <class T>
std::string qualified(const bindcore::Var<T>& x) {
  return qualified_name(x.name(), x.key());
}

std::string display_part(const std::string& qualified) {
  auto hash = qualified.find('#');
  std::string base = qualified.substr(0, hash);
  return base.empty() ? "v" : base;
}

template <class V>
using Scope = std::vector<std::pair<std::string, V>>;

template <class V>
const V* lookup(const Scope<V>& scope, const std::string& name) {
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    if (it->first == name) return &it->second;
  }
  return nullptr;
}

TyBox back(const NamedTy& a, Scope<TyVariable>& tys, FreeVarTable& free) {
  if (auto v = a.as<NamedTy::Var>()) {
    if (auto x = lookup(tys, v->name)) return smart::ty_var(*x);
    auto it = free.types.find(v->name);
    if (it == free.types.end()) it = free.types.emplace(v->name, new_ty_var(display_part(v->name))).first;
    return smart::ty_var(it->second);
  }
  if (auto r = a.as<NamedTy::Arr>()) return smart::ty_arr(back(r->dom, tys, free), back(r->cod, tys, free));
  const auto& all = std::get<NamedTy::All>(a.node());
  TyVariable x = new_ty_var(display_part(all.name));
  tys.emplace_back(all.name, x);
  TyBox body = back(all.body, tys, free);
  tys.pop_back();
  return smart::ty_all(bind_var(x, body));
}

TeBox back(const NamedTe& t, Scope<TeVariable>& tes, Scope<TyVariable>& tys, FreeVarTable& free) {
  if (auto v = t.as<NamedTe::Var>()) {
    if (auto x = lookup(tes, v->name)) return smart::te_var(*x);
    auto it = free.terms.find(v->name);
    if (it == free.terms.end()) it = free.terms.emplace(v->name, new_te_var(display_part(v->name))).first;
    return smart::te_var(it->second);
  }
  if (auto a = t.as<NamedTe::Abs>()) {
    if (!a->dom) throw std::invalid_argument("convert_back: abstraction without type annotation");
    TyBox dom = back(*a->dom, tys, free);
    TeVariable x = new_te_var(display_part(a->name));
    tes.emplace_back(a->name, x);
    TeBox body = back(a->body, tes, tys, free);
    tes.pop_back();
    return smart::te_abs(dom, bind_var(x, body));
  }
  if (auto p = t.as<NamedTe::App>()) {
    return smart::te_app(back(p->fun, tes, tys, free), back(p->arg, tes, tys, free));
  }
  if (auto l = t.as<NamedTe::Lam>()) {
    TyVariable x = new_ty_var(display_part(l->name));
    tys.emplace_back(l->name, x);
    TeBox body = back(l->body, tes, tys, free);
    tys.pop_back();
    return smart::te_lam(bind_var(x, body));
  }
  const auto& s = std::get<NamedTe::Spe>(t.node());
  return smart::te_spe(back(s.fun, tes, tys, free), back(s.arg, tys, free));
}

}  // namespace

NamedTy convert(const Ty& a) {
  if (auto v = a.as<TyVar>()) return NamedTy::var(qualified(v->var));
  if (auto r = a.as<TyArr>()) return NamedTy::arr(convert(r->dom), convert(r->cod));
  auto [x, body] = unbind(std::get<TyAll>(a.node()).body);
  return NamedTy::all(qualified(x), convert(body));
}

NamedTe convert(const Te& t) {
  if (auto v = t.as<TeVar>()) return NamedTe::var(qualified(v->var));
  if (auto a = t.as<TeAbs>()) {
    auto [x, body] = unbind(a->body);
    return NamedTe::abs(qualified(x), convert(a->dom), convert(body));
  }
  if (auto p = t.as<TeApp>()) return NamedTe::app(convert(p->fun), convert(p->arg));
  if (auto l = t.as<TeLam>()) {
    auto [x, body] = unbind(l->body);
    return NamedTe::lam(qualified(x), convert(body));
  }
  const auto& s = std::get<TeSpe>(t.node());
  return NamedTe::spe(convert(s.fun), convert(s.arg));
}

Ty convert_back(const NamedTy& a, FreeVarTable& free) {
  Scope<TyVariable> tys;
  return unbox(back(a, tys, free));
}

Te convert_back(const NamedTe& t, FreeVarTable& free) {
  Scope<TeVariable> tes;
  Scope<TyVariable> tys;
  return unbox(back(t, tes, tys, free));
}

}  // namespace oracle
