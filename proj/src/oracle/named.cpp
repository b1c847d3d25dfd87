#include "oracle/named.hpp"

namespace oracle {

NamedTy NamedTy::var(std::string name) {
  return NamedTy(std::make_shared<const Node>(Var{std::move(name)}));
}
NamedTy NamedTy::arr(NamedTy dom, NamedTy cod) {
  return NamedTy(std::make_shared<const Node>(Arr{std::move(dom), std::move(cod)}));
}
NamedTy NamedTy::all(std::string name, NamedTy body) {
  return NamedTy(std::make_shared<const Node>(All{std::move(name), std::move(body)}));
}

NamedTe NamedTe::var(std::string name) {
  return NamedTe(std::make_shared<const Node>(Var{std::move(name)}));
}
NamedTe NamedTe::abs(std::string name, std::optional<NamedTy> dom, NamedTe body) {
  return NamedTe(std::make_shared<const Node>(Abs{std::move(name), std::move(dom), std::move(body)}));
}
NamedTe NamedTe::app(NamedTe fun, NamedTe arg) {
  return NamedTe(std::make_shared<const Node>(App{std::move(fun), std::move(arg)}));
}
NamedTe NamedTe::lam(std::string name, NamedTe body) {
  return NamedTe(std::make_shared<const Node>(Lam{std::move(name), std::move(body)}));
}
NamedTe NamedTe::spe(NamedTe fun, NamedTy arg) {
  return NamedTe(std::make_shared<const Node>(Spe{std::move(fun), std::move(arg)}));
}

namespace {

void collect_ftv(const NamedTy& a, NameSet& bound, NameSet& out) {
  if (auto v = a.as<NamedTy::Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto r = a.as<NamedTy::Arr>()) {
    collect_ftv(r->dom, bound, out);
    collect_ftv(r->cod, bound, out);
  } else {
    const auto& all = std::get<NamedTy::All>(a.node());
    bool fresh = bound.insert(all.name).second;
    collect_ftv(all.body, bound, out);
    if (fresh) bound.erase(all.name);
  }
}

void collect_ftv(const NamedTe& t, NameSet& bound, NameSet& out) {
  if (t.as<NamedTe::Var>()) return;
  if (auto a = t.as<NamedTe::Abs>()) {
    if (a->dom) collect_ftv(*a->dom, bound, out);
    collect_ftv(a->body, bound, out);
  } else if (auto p = t.as<NamedTe::App>()) {
    collect_ftv(p->fun, bound, out);
    collect_ftv(p->arg, bound, out);
  } else if (auto l = t.as<NamedTe::Lam>()) {
    bool fresh = bound.insert(l->name).second;
    collect_ftv(l->body, bound, out);
    if (fresh) bound.erase(l->name);
  } else {
    const auto& s = std::get<NamedTe::Spe>(t.node());
    collect_ftv(s.fun, bound, out);
    collect_ftv(s.arg, bound, out);
  }
}

void collect_fv(const NamedTe& t, NameSet& bound, NameSet& out) {
  if (auto v = t.as<NamedTe::Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto a = t.as<NamedTe::Abs>()) {
    bool fresh = bound.insert(a->name).second;
    collect_fv(a->body, bound, out);
    if (fresh) bound.erase(a->name);
  } else if (auto p = t.as<NamedTe::App>()) {
    collect_fv(p->fun, bound, out);
    collect_fv(p->arg, bound, out);
  } else if (auto l = t.as<NamedTe::Lam>()) {
    collect_fv(l->body, bound, out);
  } else {
    collect_fv(std::get<NamedTe::Spe>(t.node()).fun, bound, out);
  }
}

NameSet unite(NameSet a, const NameSet& b, const std::string& extra) {
  a.insert(b.begin(), b.end());
  a.insert(extra);
  return a;
}

}  // namespace

NameSet free_ty_vars(const NamedTy& a) {
  NameSet bound, out;
  collect_ftv(a, bound, out);
  return out;
}

NameSet free_ty_vars(const NamedTe& t) {
  NameSet bound, out;
  collect_ftv(t, bound, out);
  return out;
}

NameSet free_te_vars(const NamedTe& t) {
  NameSet bound, out;
  collect_fv(t, bound, out);
  return out;
}

std::string freshen(const std::string& base, const NameSet& avoid) {
  std::string name = base + "'";
  while (avoid.count(name)) name += "'";
  return name;
}

NamedTy naive_subst(const NamedTy& a, const std::string& x, const NamedTy& b) {
  if (auto v = a.as<NamedTy::Var>()) return v->name == x ? b : a;
  if (auto r = a.as<NamedTy::Arr>()) {
    return NamedTy::arr(naive_subst(r->dom, x, b), naive_subst(r->cod, x, b));
  }
  const auto& all = std::get<NamedTy::All>(a.node());
  if (all.name == x) return a;
  NameSet body_fv = free_ty_vars(all.body);
  if (!body_fv.count(x)) return a;
  NameSet b_fv = free_ty_vars(b);
  if (b_fv.count(all.name)) {
    std::string z = freshen(all.name, unite(b_fv, body_fv, x));
    NamedTy renamed = naive_subst(all.body, all.name, NamedTy::var(z));
    return NamedTy::all(z, naive_subst(renamed, x, b));
  }
  return NamedTy::all(all.name, naive_subst(all.body, x, b));
}

NamedTe naive_subst(const NamedTe& t, const std::string& x, const NamedTe& u) {
  if (auto v = t.as<NamedTe::Var>()) return v->name == x ? u : t;
  if (auto a = t.as<NamedTe::Abs>()) {
    if (a->name == x) return t;
    NameSet body_fv = free_te_vars(a->body);
    if (!body_fv.count(x)) return t;
    NameSet u_fv = free_te_vars(u);
    if (u_fv.count(a->name)) {
      std::string z = freshen(a->name, unite(u_fv, body_fv, x));
      NamedTe renamed = naive_subst(a->body, a->name, NamedTe::var(z));
      return NamedTe::abs(z, a->dom, naive_subst(renamed, x, u));
    }
    return NamedTe::abs(a->name, a->dom, naive_subst(a->body, x, u));
  }
  if (auto p = t.as<NamedTe::App>()) {
    return NamedTe::app(naive_subst(p->fun, x, u), naive_subst(p->arg, x, u));
  }
  if (auto l = t.as<NamedTe::Lam>()) {
    if (!free_te_vars(l->body).count(x)) return t;
    NameSet u_ftv = free_ty_vars(u);
    if (u_ftv.count(l->name)) {
      NameSet body_ftv = free_ty_vars(l->body);
      std::string z = freshen(l->name, unite(u_ftv, body_ftv, l->name));
      NamedTe renamed = naive_subst_ty(l->body, l->name, NamedTy::var(z));
      return NamedTe::lam(z, naive_subst(renamed, x, u));
    }
    return NamedTe::lam(l->name, naive_subst(l->body, x, u));
  }
  const auto& s = std::get<NamedTe::Spe>(t.node());
  return NamedTe::spe(naive_subst(s.fun, x, u), s.arg);
}

NamedTe naive_subst_ty(const NamedTe& t, const std::string& x, const NamedTy& b) {
  if (t.as<NamedTe::Var>()) return t;
  if (auto a = t.as<NamedTe::Abs>()) {
    std::optional<NamedTy> dom;
    if (a->dom) dom = naive_subst(*a->dom, x, b);
    return NamedTe::abs(a->name, std::move(dom), naive_subst_ty(a->body, x, b));
  }
  if (auto p = t.as<NamedTe::App>()) {
    return NamedTe::app(naive_subst_ty(p->fun, x, b), naive_subst_ty(p->arg, x, b));
  }
  if (auto l = t.as<NamedTe::Lam>()) {
    if (l->name == x) return t;
    NameSet body_ftv = free_ty_vars(l->body);
    if (!body_ftv.count(x)) return t;
    NameSet b_ftv = free_ty_vars(b);
    if (b_ftv.count(l->name)) {
      std::string z = freshen(l->name, unite(b_ftv, body_ftv, x));
      NamedTe renamed = naive_subst_ty(l->body, l->name, NamedTy::var(z));
      return NamedTe::lam(z, naive_subst_ty(renamed, x, b));
    }
    return NamedTe::lam(l->name, naive_subst_ty(l->body, x, b));
  }
  const auto& s = std::get<NamedTe::Spe>(t.node());
  return NamedTe::spe(naive_subst_ty(s.fun, x, b), naive_subst(s.arg, x, b));
}

std::size_t size(const NamedTe& t) {
  if (t.as<NamedTe::Var>()) return 1;
  if (auto a = t.as<NamedTe::Abs>()) return 1 + size(a->body);
  if (auto p = t.as<NamedTe::App>()) return 1 + size(p->fun) + size(p->arg);
  if (auto l = t.as<NamedTe::Lam>()) return 1 + size(l->body);
  return 1 + size(std::get<NamedTe::Spe>(t.node()).fun);
}

}  // namespace oracle
