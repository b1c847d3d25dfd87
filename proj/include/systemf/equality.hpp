#ifndef SYSTEMF_EQUALITY_HPP
#define SYSTEMF_EQUALITY_HPP

#include "systemf/ast.hpp"

namespace systemf {

struct EqualityOptions {
  /// Answer true immediately for physically identical nodes.
  bool identity_shortcut = true;
};

/// Structural equality up to renaming of bound variables.
bool eq_ty(const Ty& a, const Ty& b, EqualityOptions opts = {});
bool eq_te(const Te& t, const Te& u, EqualityOptions opts = {});

}  // namespace systemf

#endif  // SYSTEMF_EQUALITY_HPP
