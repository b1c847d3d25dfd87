#ifndef TESTS_SUPPORT_CHURCH_HPP
#define TESTS_SUPPORT_CHURCH_HPP

#include <string>

#include "systemf/ast.hpp"

// Church numerals, written in the script syntax.
namespace testgen {

inline const std::string nat_type = "∀X.((X ⇒ X) ⇒ (X ⇒ X))";

std::string numeral_src(unsigned n);
/// λn.λm. m^n, by iterating (n [X]) m times.
std::string exp_src();
std::string mult_src();

systemf::Te parse_closed(const std::string& src);

/// Whether t is ΛX.λs:(X ⇒ X).λz:X.(s (s ... z)) with n applications,
/// up to the names of its binders. Iterative, so safe on large numerals.
bool is_numeral(const systemf::Te& t, unsigned n);

}  // namespace testgen

#endif  // TESTS_SUPPORT_CHURCH_HPP
