// Randomized checks of the stated invariants. Seeds are fixed.
#include <set>

#include "bindcore/bindcore.hpp"
#include "cli/parse.hpp"
#include "doctest.h"
#include "oracle/convert.hpp"
#include "oracle/debruijn.hpp"
#include "oracle/normalize.hpp"
#include "support/boxgen.hpp"
#include "support/termgen.hpp"
#include "systemf/equality.hpp"
#include "systemf/normalize.hpp"
#include "systemf/print.hpp"
#include "systemf/typing.hpp"

using namespace systemf;
using bindcore::bind_var;
using bindcore::subst;
using bindcore::unbox;
using testgen::StrBox;
using testgen::StrFun;

namespace {

const EqualityOptions no_shortcut{false};

bool alpha(const Te& t, const Te& u) { return oracle::alpha_eq(oracle::convert(t), oracle::convert(u)); }

std::vector<testgen::StrVar> str_pool() {
  return {testgen::new_str_var("x"), testgen::new_str_var("y"), testgen::new_str_var("x"),
          testgen::new_str_var("z1")};
}

// Random well-typed terms over the standard context.
struct Suite {
  std::vector<testgen::Binding> ctx = testgen::standard_context();
  oracle::FreeVarTable table;
  std::vector<testgen::LibraryTerm> terms;

  Suite(std::uint64_t seed, int n) {
    testgen::TermGenConfig cfg;
    cfg.min_size = 10;
    testgen::TermGen gen(seed, cfg);
    for (int i = 0; i < n; ++i) terms.push_back(testgen::to_library(gen.term(ctx), ctx, table));
  }
};

}  // namespace

TEST_CASE("boxes: sortedness and free-variable algebra") {
  bool was = bindcore::debug::enabled();
  bindcore::debug::set_enabled(true);
  auto pool = str_pool();
  testgen::BoxGen gen(11, pool);
  for (int i = 0; i < 300; ++i) {
    auto e = gen.expr(5, true);
    StrBox b = testgen::build(*e, pool);
    CHECK(testgen::box_keys(b) == testgen::free_keys(*e, pool));
    CHECK(unbox(b) == testgen::eval(*e, pool));
    const auto& vars = b.vars();
    for (std::size_t k = 1; k < vars.size(); ++k) CHECK(vars[k - 1]->key() < vars[k]->key());
  }
  for (const auto& x : pool) CHECK(testgen::box_keys(bindcore::box_var(x)) == std::set<bindcore::VarKey>{x.key()});
  bindcore::debug::set_enabled(was);
}

TEST_CASE("boxes: box_list preserves length, order and variables") {
  auto pool = str_pool();
  testgen::BoxGen gen(12, pool);
  for (int i = 0; i < 100; ++i) {
    int n = gen.pick(6);
    std::vector<StrBox> elems;
    std::vector<std::string> expected;
    std::set<bindcore::VarKey> keys;
    for (int k = 0; k < n; ++k) {
      auto e = gen.expr(3, true);
      elems.push_back(testgen::build(*e, pool));
      expected.push_back(testgen::eval(*e, pool));
      auto fk = testgen::free_keys(*e, pool);
      keys.insert(fk.begin(), fk.end());
    }
    auto l = bindcore::box_list(elems);
    CHECK(unbox(l) == expected);
    CHECK(testgen::box_keys(l) == keys);
  }
}

TEST_CASE("binders: re-entrancy and constant binders") {
  auto pool = str_pool();
  testgen::BoxGen gen(13, pool);
  for (int i = 0; i < 200; ++i) {
    auto e = gen.expr(4, true);
    const auto& x = pool[gen.pick(4)];
    auto b = unbox(bind_var(x, testgen::build(*e, pool)));
    std::string u1 = gen.literal(), u2 = gen.literal();
    std::string r1 = subst(b, u1);
    std::string r2 = subst(b, u2);
    CHECK(subst(b, u2) == r2);
    CHECK(subst(b, u1) == r1);
    CHECK(r1 == testgen::eval(*e, pool, {{static_cast<int>(&x - pool.data()), u1}}));
    if (!b.occurs()) CHECK(r1 == r2);
  }
}

TEST_CASE("substitution agrees with the oracle") {
  auto ctx = testgen::standard_context();
  testgen::TermGen gen(21);
  oracle::FreeVarTable table;
  for (int i = 0; i < 200; ++i) {
    oracle::NamedTy hole_ty = gen.type(2);
    auto with_hole = ctx;
    with_hole.push_back({"h#hole" + std::to_string(i), hole_ty});
    oracle::NamedTe body = gen.term(with_hole);
    oracle::NamedTe arg = gen.term(hole_ty, ctx);
    auto lt = testgen::to_library(body, with_hole, table);
    Te u = oracle::convert_back(arg, table);
    TeVariable h = table.terms.at(with_hole.back().name);

    auto b = unbox(bind_var(h, lift_te(lt.term)));
    Te r = subst(b, u);
    oracle::NamedTe expected =
        oracle::naive_subst(oracle::convert(lt.term), oracle::qualified_name(h.name(), h.key()), oracle::convert(u));
    CHECK(oracle::alpha_eq(oracle::convert(r), expected));

    // Re-entrancy on terms.
    Te u2 = oracle::convert_back(gen.term(hole_ty, ctx), table);
    Te r2 = subst(b, u2);
    CHECK(oracle::to_db(oracle::convert(subst(b, u))) == oracle::to_db(oracle::convert(r)));
    CHECK(oracle::to_db(oracle::convert(subst(b, u2))) == oracle::to_db(oracle::convert(r2)));
    if (!b.occurs()) CHECK(oracle::to_db(oracle::convert(r)) == oracle::to_db(oracle::convert(r2)));
  }
}

TEST_CASE("normalization properties") {
  Suite s(31, 150);
  for (const auto& lt : s.terms) {
    Te n = nf(lt.term);
    CHECK(oracle::alpha_eq(oracle::convert(n), oracle::oracle_nf(oracle::convert(lt.term))));
    CHECK(alpha(nf(hnf(lt.term)), n));
    CHECK(alpha(nf(n), n));
    Ty a = infer(lt.ctx, lt.term);
    CHECK(eq_ty(infer(lt.ctx, n), a, no_shortcut));
    CHECK(eq_ty(infer(lt.ctx, hnf(lt.term)), a, no_shortcut));
  }
}

TEST_CASE("typing properties") {
  Suite s(41, 150);
  for (const auto& lt : s.terms) {
    Ty a = infer(lt.ctx, lt.term);
    CHECK_NOTHROW(check(lt.ctx, lt.term, a));
    CHECK(eq_ty(infer(lt.ctx, update_names(lt.term)), a, no_shortcut));
  }
  // Variables from unbind are fresher than anything in a context.
  const auto& lt = s.terms.front();
  TyVariable x = new_ty_var("X");
  Ty all = Ty::all(unbox(bind_var(x, smart::ty_var(x))));
  auto [y, body] = bindcore::unbind(all.as<TyAll>()->body);
  REQUIRE(lt.ctx.max_key());
  CHECK(y.key() > *lt.ctx.max_key());
  (void)body;
}

TEST_CASE("equality properties") {
  Suite s(51, 80);
  std::vector<Te> pool;
  for (const auto& lt : s.terms) {
    pool.push_back(lt.term);
    pool.push_back(update_names(lt.term));
    pool.push_back(unbox(lift_te(lt.term)));
    pool.push_back(nf(lt.term));
  }
  testgen::TermGen pick(52);
  for (int i = 0; i < 600; ++i) {
    const Te& t = pool[pick.pick(static_cast<int>(pool.size()))];
    const Te& u = pool[pick.pick(static_cast<int>(pool.size()))];
    const Te& v = pool[pick.pick(static_cast<int>(pool.size()))];
    bool tu = eq_te(t, u, no_shortcut);
    CHECK(eq_te(t, t, no_shortcut));
    CHECK(tu == eq_te(u, t, no_shortcut));
    CHECK(tu == alpha(t, u));
    if (tu && eq_te(u, v, no_shortcut)) CHECK(eq_te(t, v, no_shortcut));
    CHECK(eq_te(t, u) == tu);
  }
  for (std::size_t i = 0; i + 3 < pool.size(); i += 4) {
    CHECK(eq_te(pool[i], pool[i + 1], no_shortcut));
    CHECK(eq_te(pool[i], pool[i + 2], no_shortcut));
    CHECK(oracle::to_db(oracle::convert(pool[i])) == oracle::to_db(oracle::convert(pool[i + 1])));
  }
}

TEST_CASE("print and parse round trip") {
  Suite s(61, 150);
  cli::FreeScope scope;
  for (const auto& [name, var] : s.table.terms) scope.terms.emplace(var.name(), var);
  for (const auto& [name, var] : s.table.types) scope.types.emplace(var.name(), var);
  scope.create_types = false;
  for (const auto& lt : s.terms) {
    for (Te t : {lt.term, nf(lt.term)}) {
      Te named = update_names(t);
      std::string text = to_string(named);
      CHECK(to_string(update_names(named)) == text);
      Te back = cli::parse_term(text, scope);
      CHECK(alpha(back, t));
      CHECK(alpha(cli::parse_term(to_string(named, Syntax::ascii), scope), t));
    }
  }
}

TEST_CASE("applicative laws") {
  auto pool = str_pool();
  testgen::BoxGen gen(71, pool);
  auto id = bindcore::box(StrFun([](const std::string& s) { return s; }));
  for (int i = 0; i < 100; ++i) {
    bool open = i % 2 == 1;
    auto v = testgen::build(*gen.expr(4, open), pool);
    CHECK(unbox(bindcore::apply_box(id, v)) == unbox(v));

    std::string lit = gen.literal();
    auto f = testgen::concat_with(gen.literal());
    CHECK(unbox(bindcore::apply_box(bindcore::box(f), bindcore::box(lit))) == f(lit));

    auto fn_box = [&]() {
      return bindcore::box_apply([](const std::string& s) { return testgen::concat_with(s); },
                                 testgen::build(*gen.expr(3, open), pool));
    };
    auto u = fn_box();
    auto w = fn_box();
    using Compose = std::function<std::function<StrFun(StrFun)>(StrFun)>;
    Compose compose = [](StrFun g) {
      return [g](StrFun h) { return StrFun([g, h](const std::string& s) { return g(h(s)); }); };
    };
    auto lhs = bindcore::apply_box(bindcore::apply_box(bindcore::apply_box(bindcore::box(compose), u), w), v);
    auto rhs = bindcore::apply_box(u, bindcore::apply_box(w, v));
    CHECK(unbox(lhs) == unbox(rhs));
  }
}
