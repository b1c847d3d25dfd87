#ifndef ORACLE_DEBRUIJN_HPP
#define ORACLE_DEBRUIJN_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "oracle/named.hpp"

// De Bruijn canonical forms. Bound variables become 1-based indices (1 is
// the nearest enclosing binder of the same sort; term and type binders are
// counted separately), free variables keep their names. Two terms are
// alpha-equivalent exactly when their canonical forms are equal.
namespace oracle {

class DbTy {
 public:
  struct Free {
    std::string name;
    bool operator==(const Free&) const = default;
  };
  struct Ind {
    int index;
    bool operator==(const Ind&) const = default;
  };
  struct Arr;
  struct All;
  using Node = std::variant<Free, Ind, Arr, All>;

  static DbTy free(std::string name);
  static DbTy ind(int index);
  static DbTy arr(DbTy dom, DbTy cod);
  static DbTy all(DbTy body);

  const Node& node() const;
  friend bool operator==(const DbTy& a, const DbTy& b);

 private:
  explicit DbTy(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct DbTy::Arr {
  DbTy dom;
  DbTy cod;
  bool operator==(const Arr&) const = default;
};
struct DbTy::All {
  DbTy body;
  bool operator==(const All&) const = default;
};

inline const DbTy::Node& DbTy::node() const { return *node_; }

class DbTe {
 public:
  struct Free {
    std::string name;
    bool operator==(const Free&) const = default;
  };
  struct Ind {
    int index;
    bool operator==(const Ind&) const = default;
  };
  struct Abs;
  struct App;
  struct Lam;
  struct Spe;
  using Node = std::variant<Free, Ind, Abs, App, Lam, Spe>;

  static DbTe free(std::string name);
  static DbTe ind(int index);
  static DbTe abs(std::optional<DbTy> dom, DbTe body);
  static DbTe app(DbTe fun, DbTe arg);
  static DbTe lam(DbTe body);
  static DbTe spe(DbTe fun, DbTy arg);

  const Node& node() const;
  friend bool operator==(const DbTe& a, const DbTe& b);

 private:
  explicit DbTe(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct DbTe::Abs {
  std::optional<DbTy> dom;
  DbTe body;
  bool operator==(const Abs&) const = default;
};
struct DbTe::App {
  DbTe fun;
  DbTe arg;
  bool operator==(const App&) const = default;
};
struct DbTe::Lam {
  DbTe body;
  bool operator==(const Lam&) const = default;
};
struct DbTe::Spe {
  DbTe fun;
  DbTy arg;
  bool operator==(const Spe&) const = default;
};

inline const DbTe::Node& DbTe::node() const { return *node_; }

DbTy to_db(const NamedTy& a);
DbTe to_db(const NamedTe& t);

bool alpha_eq(const NamedTy& a, const NamedTy& b);
bool alpha_eq(const NamedTe& t, const NamedTe& u);

/// OCaml-style rendering, e.g. "Abs(Abs(App(Ind(2),Ind(1))))".
std::string to_string(const DbTy& a);
std::string to_string(const DbTe& t);

}  // namespace oracle

#endif  // ORACLE_DEBRUIJN_HPP
