#ifndef ORACLE_CONVERT_HPP
#define ORACLE_CONVERT_HPP

#include <map>
#include <string>

#include "oracle/named.hpp"
#include "systemf/ast.hpp"

// Translation between library terms and the oracle's named terms. This is
// the only part of the oracle that sees the binding library; it lives in
// its own target so the oracle proper stays independent.
namespace oracle {

/// Variables become "name#key", so distinct variables stay distinct even
/// when they render alike.
std::string qualified_name(const std::string& name, bindcore::VarKey key);

NamedTy convert(const systemf::Ty& a);
NamedTe convert(const systemf::Te& t);

/// Free variables met while converting back, by qualified name. Missing
/// entries are created on demand (named after the part before '#').
struct FreeVarTable {
  std::map<std::string, systemf::TyVariable> types;
  std::map<std::string, systemf::TeVariable> terms;
};

systemf::Ty convert_back(const NamedTy& a, FreeVarTable& free);
/// Pure abstractions (no annotation) cannot be converted back; throws
/// std::invalid_argument.
systemf::Te convert_back(const NamedTe& t, FreeVarTable& free);

}  // namespace oracle

#endif  // ORACLE_CONVERT_HPP
