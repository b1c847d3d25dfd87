#ifndef CLI_PARSE_HPP
#define CLI_PARSE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "systemf/ast.hpp"

namespace cli {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Code is "syntax-error" or "unbound-identifier".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string code, SourcePos pos, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)), pos_(pos) {}
  const std::string& code() const { return code_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string code_;
  SourcePos pos_;
};

/// Variables that identifiers not bound in the source resolve to.
struct FreeScope {
  std::map<std::string, systemf::TyVariable> types;
  std::map<std::string, systemf::TeVariable> terms;
  /// Unknown type identifiers become free type variables (recorded in `types`).
  bool create_types = true;
  /// Unknown term identifiers become free term variables instead of errors.
  bool create_terms = false;
};

// Grammar (Unicode or ASCII keywords; whitespace and '#' comments ignored):
//   type ::= ident | ("∀" | "all") ident "." type | "(" type [("⇒" | "=>") type] ")"
//   term ::= ident
//          | ("λ" | "fun") ident ":" type "." term
//          | ("Λ" | "Lam") ident "." term
//          | "(" term { term | "[" type "]" } ")"     left-nested application
systemf::Ty parse_type(std::string_view src, FreeScope& scope);
systemf::Te parse_term(std::string_view src, FreeScope& scope);

struct Def {
  std::string name;
  std::optional<systemf::Ty> type;
  systemf::Te term;
  SourcePos pos;
};
struct AssertType {
  systemf::Te term;
  systemf::Ty type;
  SourcePos pos;
};
struct Eval {
  systemf::Te term;
  SourcePos pos;
};
struct Print {
  systemf::Te term;
  SourcePos pos;
};
using Statement = std::variant<Def, AssertType, Eval, Print>;

struct Script {
  std::vector<Statement> statements;
};

// Statements, each terminated by ';':
//   def NAME [: TYPE] = TERM;   assert TERM : TYPE;   eval TERM;   print TERM;
// Definitions are inlined at later use sites. Free type identifiers are
// shared across the whole script.
Script parse_script(std::string_view src);
Script parse_script(std::string_view src, FreeScope& scope);

}  // namespace cli

#endif  // CLI_PARSE_HPP
