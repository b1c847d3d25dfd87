#ifndef SYSTEMF_AST_HPP
#define SYSTEMF_AST_HPP

#include <memory>
#include <string_view>
#include <variant>

#include "bindcore/binder.hpp"
#include "bindcore/box.hpp"
#include "bindcore/var.hpp"

// Church-style System F.
//
//   A, B ::= X | A => B | all X. A
//   t, u ::= x | fun x:A. t | t u | Lam X. t | t [A]
namespace systemf {

class Ty;
class Te;

struct TyVar;
struct TyArr;
struct TyAll;

struct TeVar;
struct TeAbs;
struct TeApp;
struct TeLam;
struct TeSpe;

using TyVariable = bindcore::Var<Ty>;
using TeVariable = bindcore::Var<Te>;
using TyBox = bindcore::Box<Ty>;
using TeBox = bindcore::Box<Te>;

class Ty {
 public:
  using Node = std::variant<TyVar, TyArr, TyAll>;

  static Ty var(const TyVariable& x);
  static Ty arr(Ty dom, Ty cod);
  static Ty all(bindcore::Binder<Ty, Ty> body);

  template <class N>
  const N* as() const;
  const Node& node() const;

  /// Same node in memory.
  bool same(const Ty& other) const { return node_.get() == other.node_.get(); }

 private:
  explicit Ty(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Te {
 public:
  using Node = std::variant<TeVar, TeAbs, TeApp, TeLam, TeSpe>;

  static Te var(const TeVariable& x);
  static Te abs(Ty dom, bindcore::Binder<Te, Te> body);
  static Te app(Te fun, Te arg);
  static Te lam(bindcore::Binder<Ty, Te> body);
  static Te spe(Te fun, Ty arg);

  template <class N>
  const N* as() const;
  const Node& node() const;

  bool same(const Te& other) const { return node_.get() == other.node_.get(); }

 private:
  explicit Te(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TyVar {
  TyVariable var;
};
struct TyArr {
  Ty dom;
  Ty cod;
};
struct TyAll {
  bindcore::Binder<Ty, Ty> body;
};

struct TeVar {
  TeVariable var;
};
struct TeAbs {
  Ty dom;
  bindcore::Binder<Te, Te> body;
};
struct TeApp {
  Te fun;
  Te arg;
};
struct TeLam {
  bindcore::Binder<Ty, Te> body;
};
struct TeSpe {
  Te fun;
  Ty arg;
};

template <class N>
const N* Ty::as() const {
  return std::get_if<N>(node_.get());
}
inline const Ty::Node& Ty::node() const { return *node_; }

template <class N>
const N* Te::as() const {
  return std::get_if<N>(node_.get());
}
inline const Te::Node& Te::node() const { return *node_; }

TyVariable new_ty_var(std::string_view name);
TeVariable new_te_var(std::string_view name);

// Smart constructors: the AST constructors lifted to boxes.
namespace smart {

TyBox ty_var(const TyVariable& x);
TyBox ty_arr(const TyBox& dom, const TyBox& cod);
TyBox ty_all(const bindcore::Box<bindcore::Binder<Ty, Ty>>& body);

TeBox te_var(const TeVariable& x);
TeBox te_abs(const TyBox& dom, const bindcore::Box<bindcore::Binder<Te, Te>>& body);
TeBox te_app(const TeBox& fun, const TeBox& arg);
TeBox te_lam(const bindcore::Box<bindcore::Binder<Ty, Te>>& body);
TeBox te_spe(const TeBox& fun, const TyBox& arg);

}  // namespace smart

TyBox lift_ty(const Ty& a);
TeBox lift_te(const Te& t);

}  // namespace systemf

#endif  // SYSTEMF_AST_HPP
