#include "cli/parse.hpp"

#include <cctype>
#include <utility>

#include "bindcore/binder.hpp"

namespace cli {

using bindcore::bind_var;
using bindcore::unbox;
using namespace systemf;

namespace {

enum class Tok {
  ident,
  lambda,
  big_lambda,
  forall,
  arrow,
  lparen,
  rparen,
  lbrack,
  rbrack,
  colon,
  dot,
  semi,
  equals,
  kw_def,
  kw_assert,
  kw_eval,
  kw_print,
  end,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lambda: return "'λ'";
    case Tok::big_lambda: return "'Λ'";
    case Tok::forall: return "'∀'";
    case Tok::arrow: return "'⇒'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrack: return "'['";
    case Tok::rbrack: return "']'";
    case Tok::colon: return "':'";
    case Tok::dot: return "'.'";
    case Tok::semi: return "';'";
    case Tok::equals: return "'='";
    case Tok::kw_def: return "'def'";
    case Tok::kw_assert: return "'assert'";
    case Tok::kw_eval: return "'eval'";
    case Tok::kw_print: return "'print'";
    case Tok::end: return "end of input";
  }
  return "token";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourcePos start = pos_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::end, "", start});
        return out;
      }
      out.push_back(next(start));
    }
  }

 private:
  Token next(SourcePos start) {
    char c = src_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = i_;
      while (i_ < src_.size() && is_ident_char(src_[i_])) advance(1);
      std::string word(src_.substr(b, i_ - b));
      return {keyword(word), word, start};
    }
    static const std::pair<std::string_view, Tok> symbols[] = {
        {"λ", Tok::lambda}, {"Λ", Tok::big_lambda}, {"∀", Tok::forall}, {"⇒", Tok::arrow},
        {"=>", Tok::arrow}, {"(", Tok::lparen},     {")", Tok::rparen},  {"[", Tok::lbrack},
        {"]", Tok::rbrack}, {":", Tok::colon},      {".", Tok::dot},     {";", Tok::semi},
        {"=", Tok::equals},
    };
    for (const auto& [text, kind] : symbols) {
      if (src_.substr(i_, text.size()) == text) {
        advance(text.size());
        return {kind, std::string(text), start};
      }
    }
    throw ParseError("syntax-error", start, "unexpected character");
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  static Tok keyword(const std::string& w) {
    if (w == "fun") return Tok::lambda;
    if (w == "Lam") return Tok::big_lambda;
    if (w == "all") return Tok::forall;
    if (w == "def") return Tok::kw_def;
    if (w == "assert") return Tok::kw_assert;
    if (w == "eval") return Tok::kw_eval;
    if (w == "print") return Tok::kw_print;
    return Tok::ident;
  }

  void skip_space() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  // Columns count code points.
  void advance(std::size_t bytes) {
    for (std::size_t k = 0; k < bytes && i_ < src_.size(); ++k, ++i_) {
      unsigned char c = static_cast<unsigned char>(src_[i_]);
      if (c == '\n') {
        ++pos_.line;
        pos_.column = 1;
      } else if ((c & 0xC0) != 0x80) {
        ++pos_.column;
      }
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

class Parser {
 public:
  Parser(std::string_view src, FreeScope& scope) : toks_(Lexer(src).run()), scope_(scope) {}

  TyBox type() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        advance();
        return smart::ty_var(resolve_type(t));
      }
      case Tok::forall: {
        advance();
        Token name = expect(Tok::ident);
        expect(Tok::dot);
        TyVariable x = new_ty_var(name.text);
        ty_scope_.emplace_back(name.text, x);
        TyBox body = type();
        ty_scope_.pop_back();
        return smart::ty_all(bind_var(x, body));
      }
      case Tok::lparen: {
        advance();
        TyBox a = type();
        if (accept(Tok::arrow)) {
          TyBox b = type();
          expect(Tok::rparen);
          return smart::ty_arr(a, b);
        }
        expect(Tok::rparen);
        return a;
      }
      default:
        throw unexpected("a type");
    }
  }

  TeBox term() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::ident: {
        advance();
        return resolve_term(t);
      }
      case Tok::lambda: {
        advance();
        Token name = expect(Tok::ident);
        expect(Tok::colon);
        TyBox dom = type();
        expect(Tok::dot);
        TeVariable x = new_te_var(name.text);
        te_scope_.emplace_back(name.text, x);
        TeBox body = term();
        te_scope_.pop_back();
        return smart::te_abs(dom, bind_var(x, body));
      }
      case Tok::big_lambda: {
        advance();
        Token name = expect(Tok::ident);
        expect(Tok::dot);
        TyVariable x = new_ty_var(name.text);
        ty_scope_.emplace_back(name.text, x);
        TeBox body = term();
        ty_scope_.pop_back();
        return smart::te_lam(bind_var(x, body));
      }
      case Tok::lparen: {
        advance();
        TeBox acc = term();
        while (!accept(Tok::rparen)) {
          if (accept(Tok::lbrack)) {
            TyBox a = type();
            expect(Tok::rbrack);
            acc = smart::te_spe(acc, a);
          } else {
            acc = smart::te_app(acc, term());
          }
        }
        return acc;
      }
      default:
        throw unexpected("a term");
    }
  }

  Script script() {
    Script out;
    while (peek().kind != Tok::end) {
      const Token& head = peek();
      SourcePos pos = head.pos;
      switch (head.kind) {
        case Tok::kw_def: {
          advance();
          Token name = expect(Tok::ident);
          std::optional<Ty> annot;
          if (accept(Tok::colon)) annot = unbox(type());
          expect(Tok::equals);
          SourcePos tpos = peek().pos;
          Te body = unbox(term());
          expect(Tok::semi);
          defs_.insert_or_assign(name.text, body);
          out.statements.push_back(Def{name.text, annot, body, tpos});
          break;
        }
        case Tok::kw_assert: {
          advance();
          SourcePos tpos = peek().pos;
          Te body = unbox(term());
          expect(Tok::colon);
          Ty a = unbox(type());
          expect(Tok::semi);
          out.statements.push_back(AssertType{body, a, tpos});
          break;
        }
        case Tok::kw_eval: {
          advance();
          SourcePos tpos = peek().pos;
          Te body = unbox(term());
          expect(Tok::semi);
          out.statements.push_back(Eval{body, tpos});
          break;
        }
        case Tok::kw_print: {
          advance();
          SourcePos tpos = peek().pos;
          Te body = unbox(term());
          expect(Tok::semi);
          out.statements.push_back(Print{body, tpos});
          break;
        }
        default:
          throw unexpected("a statement ('def', 'assert', 'eval' or 'print')");
      }
      (void)pos;
    }
    return out;
  }

  void finish() {
    if (peek().kind != Tok::end) throw unexpected("end of input");
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  void advance() {
    if (i_ + 1 < toks_.size()) ++i_;
  }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }
  Token expect(Tok k) {
    if (peek().kind != k) throw unexpected(describe(k));
    Token t = peek();
    advance();
    return t;
  }

  ParseError unexpected(const std::string& wanted) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    return ParseError("syntax-error", t.pos, "expected " + wanted + " but found " + found);
  }

  template <class V>
  static const V* lookup(const std::vector<std::pair<std::string, V>>& scope, const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
      if (it->first == name) return &it->second;
    }
    return nullptr;
  }

  TyVariable resolve_type(const Token& t) {
    if (auto x = lookup(ty_scope_, t.text)) return *x;
    if (auto it = scope_.types.find(t.text); it != scope_.types.end()) return it->second;
    if (!scope_.create_types) {
      throw ParseError("unbound-identifier", t.pos, "unbound type identifier '" + t.text + "'");
    }
    return scope_.types.emplace(t.text, new_ty_var(t.text)).first->second;
  }

  TeBox resolve_term(const Token& t) {
    if (auto x = lookup(te_scope_, t.text)) return smart::te_var(*x);
    if (auto it = defs_.find(t.text); it != defs_.end()) return lift_te(it->second);
    if (auto it = scope_.terms.find(t.text); it != scope_.terms.end()) return smart::te_var(it->second);
    if (!scope_.create_terms) {
      throw ParseError("unbound-identifier", t.pos, "unbound identifier '" + t.text + "'");
    }
    return smart::te_var(scope_.terms.emplace(t.text, new_te_var(t.text)).first->second);
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  FreeScope& scope_;
  std::vector<std::pair<std::string, TeVariable>> te_scope_;
  std::vector<std::pair<std::string, TyVariable>> ty_scope_;
  std::map<std::string, Te> defs_;
};

}  // namespace

Ty parse_type(std::string_view src, FreeScope& scope) {
  Parser p(src, scope);
  TyBox a = p.type();
  p.finish();
  return unbox(a);
}

Te parse_term(std::string_view src, FreeScope& scope) {
  Parser p(src, scope);
  TeBox t = p.term();
  p.finish();
  return unbox(t);
}

Script parse_script(std::string_view src, FreeScope& scope) { return Parser(src, scope).script(); }

Script parse_script(std::string_view src) {
  FreeScope scope;
  return parse_script(src, scope);
}

}  // namespace cli
