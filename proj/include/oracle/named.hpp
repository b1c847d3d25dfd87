#ifndef ORACLE_NAMED_HPP
#define ORACLE_NAMED_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>

// Naive named representation of System F: variables and binders are plain
// strings and substitution renames binders on capture risk. Independent of
// the binding library; used as ground truth.
namespace oracle {

class NamedTy {
 public:
  struct Var {
    std::string name;
  };
  struct Arr;
  struct All;
  using Node = std::variant<Var, Arr, All>;

  static NamedTy var(std::string name);
  static NamedTy arr(NamedTy dom, NamedTy cod);
  static NamedTy all(std::string name, NamedTy body);

  template <class N>
  const N* as() const;
  const Node& node() const;

 private:
  explicit NamedTy(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct NamedTy::Arr {
  NamedTy dom;
  NamedTy cod;
};
struct NamedTy::All {
  std::string name;
  NamedTy body;
};

template <class N>
const N* NamedTy::as() const {
  return std::get_if<N>(node_.get());
}
inline const NamedTy::Node& NamedTy::node() const { return *node_; }

class NamedTe {
 public:
  struct Var {
    std::string name;
  };
  struct Abs;
  struct App;
  struct Lam;
  struct Spe;
  using Node = std::variant<Var, Abs, App, Lam, Spe>;

  static NamedTe var(std::string name);
  /// A missing annotation gives a pure (untyped) abstraction.
  static NamedTe abs(std::string name, std::optional<NamedTy> dom, NamedTe body);
  static NamedTe app(NamedTe fun, NamedTe arg);
  static NamedTe lam(std::string name, NamedTe body);
  static NamedTe spe(NamedTe fun, NamedTy arg);

  template <class N>
  const N* as() const;
  const Node& node() const;

 private:
  explicit NamedTe(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct NamedTe::Abs {
  std::string name;
  std::optional<NamedTy> dom;
  NamedTe body;
};
struct NamedTe::App {
  NamedTe fun;
  NamedTe arg;
};
struct NamedTe::Lam {
  std::string name;
  NamedTe body;
};
struct NamedTe::Spe {
  NamedTe fun;
  NamedTy arg;
};

template <class N>
const N* NamedTe::as() const {
  return std::get_if<N>(node_.get());
}
inline const NamedTe::Node& NamedTe::node() const { return *node_; }

using NameSet = std::set<std::string>;

NameSet free_ty_vars(const NamedTy& a);
/// Free type variables of a term (in annotations and specializations).
NameSet free_ty_vars(const NamedTe& t);
/// Free term variables.
NameSet free_te_vars(const NamedTe& t);

/// a[x := b]
NamedTy naive_subst(const NamedTy& a, const std::string& x, const NamedTy& b);
/// t[x := u] for a term variable x.
NamedTe naive_subst(const NamedTe& t, const std::string& x, const NamedTe& u);
/// t[X := b] for a type variable X.
NamedTe naive_subst_ty(const NamedTe& t, const std::string& x, const NamedTy& b);

/// Appends primes to `base` until it is outside `avoid`.
std::string freshen(const std::string& base, const NameSet& avoid);

/// Number of term constructors.
std::size_t size(const NamedTe& t);

}  // namespace oracle

#endif  // ORACLE_NAMED_HPP
