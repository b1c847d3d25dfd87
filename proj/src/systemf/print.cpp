#include "systemf/print.hpp"

#include <sstream>

namespace systemf {

using bindcore::name_of;
using bindcore::unbind;
using bindcore::unbox;

namespace {

struct Tokens {
  const char* arrow;
  const char* forall;
  const char* lambda;
  const char* big_lambda;
};

const Tokens& tokens(Syntax s) {
  static const Tokens unicode{" ⇒ ", "∀", "λ", "Λ"};
  static const Tokens ascii{" => ", "all ", "fun ", "Lam "};
  return s == Syntax::unicode ? unicode : ascii;
}

}  // namespace

void print_ty(std::ostream& os, const Ty& a, Syntax syntax) {
  const Tokens& tk = tokens(syntax);
  if (auto v = a.as<TyVar>()) {
    os << name_of(v->var);
  } else if (auto arr = a.as<TyArr>()) {
    os << '(';
    print_ty(os, arr->dom, syntax);
    os << tk.arrow;
    print_ty(os, arr->cod, syntax);
    os << ')';
  } else {
    auto [x, body] = unbind(std::get<TyAll>(a.node()).body);
    os << tk.forall << name_of(x) << '.';
    print_ty(os, body, syntax);
  }
}

void print_te(std::ostream& os, const Te& t, Syntax syntax) {
  const Tokens& tk = tokens(syntax);
  if (auto v = t.as<TeVar>()) {
    os << name_of(v->var);
  } else if (auto abs = t.as<TeAbs>()) {
    auto [x, body] = unbind(abs->body);
    os << tk.lambda << name_of(x) << ':';
    print_ty(os, abs->dom, syntax);
    os << '.';
    print_te(os, body, syntax);
  } else if (auto app = t.as<TeApp>()) {
    os << '(';
    print_te(os, app->fun, syntax);
    os << ' ';
    print_te(os, app->arg, syntax);
    os << ')';
  } else if (auto lam = t.as<TeLam>()) {
    auto [x, body] = unbind(lam->body);
    os << tk.big_lambda << name_of(x) << '.';
    print_te(os, body, syntax);
  } else {
    const auto& spe = std::get<TeSpe>(t.node());
    os << '(';
    print_te(os, spe.fun, syntax);
    os << " [";
    print_ty(os, spe.arg, syntax);
    os << "])";
  }
}

std::string to_string(const Ty& a, Syntax syntax) {
  std::ostringstream os;
  print_ty(os, a, syntax);
  return os.str();
}

std::string to_string(const Te& t, Syntax syntax) {
  std::ostringstream os;
  print_te(os, t, syntax);
  return os.str();
}

Te update_names(const Te& t) { return unbox(lift_te(t)); }
Ty update_names(const Ty& a) { return unbox(lift_ty(a)); }

}  // namespace systemf
