#ifndef SYSTEMF_PRINT_HPP
#define SYSTEMF_PRINT_HPP

#include <ostream>
#include <string>

#include "systemf/ast.hpp"

namespace systemf {

enum class Syntax { unicode, ascii };

// Canonical rendering:
//   types  A ::= X | "(" A " ⇒ " A ")" | "∀" X "." A
//   terms  t ::= x | "λ" x ":" A "." t | "(" t " " t ")" | "Λ" X "." t | "(" t " [" A "])"
// The ASCII form uses "=>", "all ", "fun ", "Lam " instead.
//
// Bound variables print under the name the binder carries; call
// update_names first if the value was produced by substitution.
void print_ty(std::ostream& os, const Ty& a, Syntax syntax = Syntax::unicode);
void print_te(std::ostream& os, const Te& t, Syntax syntax = Syntax::unicode);

std::string to_string(const Ty& a, Syntax syntax = Syntax::unicode);
std::string to_string(const Te& t, Syntax syntax = Syntax::unicode);

/// Recomputes binder names so that no binder shares its rendered name with
/// a distinct variable free beneath it. Alpha-equal to the input.
Te update_names(const Te& t);
Ty update_names(const Ty& a);

}  // namespace systemf

#endif  // SYSTEMF_PRINT_HPP
