#include "oracle/debruijn.hpp"

#include <sstream>
#include <vector>

namespace oracle {

DbTy DbTy::free(std::string name) { return DbTy(std::make_shared<const Node>(Free{std::move(name)})); }
DbTy DbTy::ind(int index) { return DbTy(std::make_shared<const Node>(Ind{index})); }
DbTy DbTy::arr(DbTy dom, DbTy cod) {
  return DbTy(std::make_shared<const Node>(Arr{std::move(dom), std::move(cod)}));
}
DbTy DbTy::all(DbTy body) { return DbTy(std::make_shared<const Node>(All{std::move(body)})); }

bool operator==(const DbTy& a, const DbTy& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

DbTe DbTe::free(std::string name) { return DbTe(std::make_shared<const Node>(Free{std::move(name)})); }
DbTe DbTe::ind(int index) { return DbTe(std::make_shared<const Node>(Ind{index})); }
DbTe DbTe::abs(std::optional<DbTy> dom, DbTe body) {
  return DbTe(std::make_shared<const Node>(Abs{std::move(dom), std::move(body)}));
}
DbTe DbTe::app(DbTe fun, DbTe arg) {
  return DbTe(std::make_shared<const Node>(App{std::move(fun), std::move(arg)}));
}
DbTe DbTe::lam(DbTe body) { return DbTe(std::make_shared<const Node>(Lam{std::move(body)})); }
DbTe DbTe::spe(DbTe fun, DbTy arg) {
  return DbTe(std::make_shared<const Node>(Spe{std::move(fun), std::move(arg)}));
}

bool operator==(const DbTe& a, const DbTe& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

namespace {

using Scope = std::vector<std::string>;  // innermost binder last

std::optional<int> lookup(const Scope& scope, const std::string& name) {
  for (std::size_t i = scope.size(); i > 0; --i) {
    if (scope[i - 1] == name) return int(scope.size() - i + 1);
  }
  return std::nullopt;
}

DbTy convert(const NamedTy& a, Scope& tys) {
  if (auto v = a.as<NamedTy::Var>()) {
    if (auto i = lookup(tys, v->name)) return DbTy::ind(*i);
    return DbTy::free(v->name);
  }
  if (auto r = a.as<NamedTy::Arr>()) return DbTy::arr(convert(r->dom, tys), convert(r->cod, tys));
  const auto& all = std::get<NamedTy::All>(a.node());
  tys.push_back(all.name);
  DbTy body = convert(all.body, tys);
  tys.pop_back();
  return DbTy::all(body);
}

DbTe convert(const NamedTe& t, Scope& tes, Scope& tys) {
  if (auto v = t.as<NamedTe::Var>()) {
    if (auto i = lookup(tes, v->name)) return DbTe::ind(*i);
    return DbTe::free(v->name);
  }
  if (auto a = t.as<NamedTe::Abs>()) {
    std::optional<DbTy> dom;
    if (a->dom) dom = convert(*a->dom, tys);
    tes.push_back(a->name);
    DbTe body = convert(a->body, tes, tys);
    tes.pop_back();
    return DbTe::abs(std::move(dom), body);
  }
  if (auto p = t.as<NamedTe::App>()) {
    return DbTe::app(convert(p->fun, tes, tys), convert(p->arg, tes, tys));
  }
  if (auto l = t.as<NamedTe::Lam>()) {
    tys.push_back(l->name);
    DbTe body = convert(l->body, tes, tys);
    tys.pop_back();
    return DbTe::lam(body);
  }
  const auto& s = std::get<NamedTe::Spe>(t.node());
  return DbTe::spe(convert(s.fun, tes, tys), convert(s.arg, tys));
}

void render(std::ostream& os, const DbTy& a) {
  std::visit(
      [&os](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, DbTy::Free>) {
          os << "Var(\"" << n.name << "\")";
        } else if constexpr (std::is_same_v<N, DbTy::Ind>) {
          os << "Ind(" << n.index << ")";
        } else if constexpr (std::is_same_v<N, DbTy::Arr>) {
          os << "Arr(";
          render(os, n.dom);
          os << ",";
          render(os, n.cod);
          os << ")";
        } else {
          os << "All(";
          render(os, n.body);
          os << ")";
        }
      },
      a.node());
}

void render(std::ostream& os, const DbTe& t) {
  std::visit(
      [&os](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, DbTe::Free>) {
          os << "Var(\"" << n.name << "\")";
        } else if constexpr (std::is_same_v<N, DbTe::Ind>) {
          os << "Ind(" << n.index << ")";
        } else if constexpr (std::is_same_v<N, DbTe::Abs>) {
          os << "Abs(";
          if (n.dom) {
            render(os, *n.dom);
            os << ",";
          }
          render(os, n.body);
          os << ")";
        } else if constexpr (std::is_same_v<N, DbTe::App>) {
          os << "App(";
          render(os, n.fun);
          os << ",";
          render(os, n.arg);
          os << ")";
        } else if constexpr (std::is_same_v<N, DbTe::Lam>) {
          os << "Lam(";
          render(os, n.body);
          os << ")";
        } else {
          os << "Spe(";
          render(os, n.fun);
          os << ",";
          render(os, n.arg);
          os << ")";
        }
      },
      t.node());
}

}  // namespace

DbTy to_db(const NamedTy& a) {
  Scope tys;
  return convert(a, tys);
}

DbTe to_db(const NamedTe& t) {
  Scope tes, tys;
  return convert(t, tes, tys);
}

bool alpha_eq(const NamedTy& a, const NamedTy& b) { return to_db(a) == to_db(b); }
bool alpha_eq(const NamedTe& t, const NamedTe& u) { return to_db(t) == to_db(u); }

std::string to_string(const DbTy& a) {
  std::ostringstream os;
  render(os, a);
  return os.str();
}

std::string to_string(const DbTe& t) {
  std::ostringstream os;
  render(os, t);
  return os.str();
}

}  // namespace oracle
