// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
// usage: acceptance <path-to-sysf> <golden-script>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "bindcore/bindcore.hpp"
#include "cli/parse.hpp"
#include "cli/stack.hpp"
#include "oracle/convert.hpp"
#include "oracle/debruijn.hpp"
#include "oracle/normalize.hpp"
#include "support/appl.hpp"
#include "support/boxgen.hpp"
#include "support/church.hpp"
#include "support/scopes.hpp"
#include "support/termgen.hpp"
#include "systemf/equality.hpp"
#include "systemf/normalize.hpp"
#include "systemf/print.hpp"
#include "systemf/typing.hpp"

using namespace systemf;
using bindcore::bind_var;
using bindcore::subst;
using bindcore::unbox;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned thresholds.
constexpr int diff_terms = 1000;
constexpr double diff_seconds = 60.0;
constexpr std::size_t diff_min_size = 15;
constexpr int law_boxes = 500;
constexpr int renaming_terms = 500;
constexpr int renaming_substs = 3;
constexpr double church_seconds = 5.0;
constexpr unsigned church_base = 2;
constexpr unsigned church_exponent = 16;

const EqualityOptions no_shortcut{false};

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1 and 6 share one pass over the differential suite.
struct DiffStats {
  int terms = 0;
  int agree = 0;
  std::size_t max_size = 0;
  std::size_t total_size = 0;
  double seconds = 0;
  std::uint64_t subst_calls = 0;
  std::uint64_t subst_lookups = 0;
};

DiffStats run_differential() {
  DiffStats st;
  bool was = bindcore::debug::enabled();
  bindcore::debug::set_enabled(true);
  const std::uint64_t calls0 = bindcore::debug::subst_calls();
  const std::uint64_t lookups0 = bindcore::debug::subst_lookups();
  auto t0 = Clock::now();

  auto ctx = testgen::standard_context();
  oracle::FreeVarTable table;
  testgen::TermGenConfig cfg;
  cfg.max_depth = 8;
  cfg.min_size = diff_min_size;
  testgen::TermGen gen(1, cfg);
  for (int i = 0; i < diff_terms; ++i) {
    oracle::NamedTe named = gen.term(ctx);
    st.max_size = std::max(st.max_size, oracle::size(named));
    st.total_size += oracle::size(named);
    auto lt = testgen::to_library(named, ctx, table);
    infer(lt.ctx, lt.term);
    Te n = nf(lt.term);
    if (oracle::alpha_eq(oracle::convert(n), oracle::oracle_nf(oracle::convert(lt.term)))) ++st.agree;
    ++st.terms;
  }

  st.seconds = seconds_since(t0);
  st.subst_calls = bindcore::debug::subst_calls() - calls0;
  st.subst_lookups = bindcore::debug::subst_lookups() - lookups0;
  bindcore::debug::set_enabled(was);
  return st;
}

Outcome criterion1(const DiffStats& st) {
  std::ostringstream os;
  os << st.agree << "/" << st.terms << " agree, mean size " << st.total_size / std::max(st.terms, 1)
     << ", max size " << st.max_size << ", " << st.seconds << " s";
  return {st.terms >= diff_terms && st.agree == st.terms && st.max_size <= 50 && st.seconds < diff_seconds,
          os.str()};
}

Outcome criterion2() {
  Te te = unbox(testgen::appl_te());
  Ty ty = unbox(testgen::appl_ty());
  bool inferred = eq_ty(infer(Context{}, te), ty, no_shortcut);
  bool checked = true;
  try {
    check(Context{}, te, ty);
  } catch (const TypeError&) {
    checked = false;
  }
  return {inferred && checked, "infer: " + to_string(infer(Context{}, te)) + (checked ? ", check ok" : ", check failed")};
}

Outcome criterion3() {
  using namespace smart;
  TyVariable a = new_ty_var("A");
  TeVariable x1 = new_te_var("x"), x2 = new_te_var("x"), y = new_te_var("y"), x3 = new_te_var("x");
  Te left = unbox(te_abs(ty_var(a), bind_var(x1, te_abs(ty_var(a), bind_var(x2, te_var(x2))))));
  Te right = unbox(te_abs(ty_var(a), bind_var(x3, te_abs(ty_var(a), bind_var(y, te_var(y))))));
  bool eq = eq_te(left, right, no_shortcut);

  using oracle::NamedTe;
  NamedTe t = NamedTe::abs("x", std::nullopt,
                           NamedTe::abs("y", std::nullopt, NamedTe::app(NamedTe::var("x"), NamedTe::var("y"))));
  std::string db = oracle::to_string(oracle::to_db(t));
  return {eq && db == "Abs(Abs(App(Ind(2),Ind(1))))", std::string("eq_te ") + (eq ? "true" : "false") + ", " + db};
}

Outcome criterion4() {
  using testgen::StrFun;
  std::vector<testgen::StrVar> pool{testgen::new_str_var("x"), testgen::new_str_var("y"),
                                    testgen::new_str_var("x"), testgen::new_str_var("w2")};
  testgen::BoxGen gen(4, pool);
  auto id = bindcore::box(StrFun([](const std::string& s) { return s; }));
  using Compose = std::function<std::function<StrFun(StrFun)>(StrFun)>;
  Compose compose = [](StrFun g) {
    return [g](StrFun h) { return StrFun([g, h](const std::string& s) { return g(h(s)); }); };
  };
  int failures = 0, closed = 0, open = 0;
  for (int i = 0; i < 2 * law_boxes; ++i) {
    const bool want_open = i >= law_boxes;
    testgen::StrExprPtr e;
    do e = gen.expr(5, want_open);
    while (want_open && testgen::free_keys(*e, pool).empty());
    auto v = testgen::build(*e, pool);
    (v.is_closed() ? closed : open) += 1;

    if (unbox(bindcore::apply_box(id, v)) != unbox(v)) ++failures;

    auto f = testgen::concat_with(testgen::eval(*gen.expr(3, want_open), pool));
    std::string xv = testgen::eval(*gen.expr(3, want_open), pool);
    if (unbox(bindcore::apply_box(bindcore::box(f), bindcore::box(xv))) != f(xv)) ++failures;

    auto fn = [&]() {
      return bindcore::box_apply([](const std::string& s) { return testgen::concat_with(s); },
                                 testgen::build(*gen.expr(3, want_open), pool));
    };
    auto u = fn();
    auto w = fn();
    auto lhs = bindcore::apply_box(bindcore::apply_box(bindcore::apply_box(bindcore::box(compose), u), w), v);
    auto rhs = bindcore::apply_box(u, bindcore::apply_box(w, v));
    if (unbox(lhs) != unbox(rhs)) ++failures;
  }
  std::ostringstream os;
  os << closed << " closed, " << open << " open, " << failures << " violations";
  return {failures == 0 && closed == law_boxes && open == law_boxes, os.str()};
}

Outcome criterion5() {
  std::vector<testgen::StrVar> pool{testgen::new_str_var("x"), testgen::new_str_var("y"),
                                    testgen::new_str_var("z"), testgen::new_str_var("x")};
  testgen::BoxGen gen(5, pool);
  int failures = 0, n = 0;
  while (n < law_boxes) {
    auto e1 = gen.expr(4, true);
    auto e2 = gen.expr(4, true);
    auto k1 = testgen::free_keys(*e1, pool);
    auto k2 = testgen::free_keys(*e2, pool);
    if (k1.empty() && k2.empty()) continue;
    ++n;
    auto f = bindcore::box_apply([](const std::string& s) { return testgen::concat_with(s); },
                                 testgen::build(*e1, pool));
    auto a = testgen::build(*e2, pool);
    auto expected = k1;
    expected.insert(k2.begin(), k2.end());
    if (testgen::box_keys(bindcore::apply_box(f, a)) != expected) ++failures;

    const auto& x = pool[gen.pick(static_cast<int>(pool.size()))];
    auto removed = k2;
    removed.erase(x.key());
    if (testgen::box_keys(bind_var(x, a)) != removed) ++failures;
  }
  std::ostringstream os;
  os << n << " open boxes, " << failures << " violations";
  return {failures == 0, os.str()};
}

Outcome criterion6(const DiffStats& st) {
  std::ostringstream os;
  os << st.subst_calls << " subst calls, lookup delta " << st.subst_lookups;
  return {st.subst_calls > 0 && st.subst_lookups == 0, os.str()};
}

Outcome criterion7() {
  using oracle::NamedTy;
  NamedTy ta = NamedTy::var("A"), tb = NamedTy::var("B");
  std::vector<testgen::Binding> ctx{
      {"x#free", ta},
      {"y#free", tb},
      {"g#free", NamedTy::arr(ta, tb)},
      {"bot#free", NamedTy::all("Z#free", NamedTy::var("Z#free"))},
  };
  std::vector<testgen::Binding> holes{{"h#1", ta}, {"h#2", tb}, {"h#3", ta}};
  auto with_holes = ctx;
  with_holes.insert(with_holes.end(), holes.begin(), holes.end());

  testgen::TermGenConfig cfg;
  cfg.term_names = {"x", "y"};
  cfg.type_names = {"X", "A"};
  cfg.min_size = 10;
  testgen::TermGen gen(7, cfg);
  oracle::FreeVarTable table;

  cli::FreeScope scope;
  scope.create_types = false;

  int ok = 0, ambiguous_before = 0, ambiguous_after = 0, done = 0;
  while (done < renaming_terms) {
    oracle::NamedTe body = gen.term(with_holes);
    auto fv = oracle::free_te_vars(body);
    bool all_holes = true;
    for (const auto& h : holes) all_holes = all_holes && fv.count(h.name);
    if (!all_holes) continue;
    ++done;

    auto lt = testgen::to_library(body, with_holes, table);
    Te r = lt.term;
    for (int k = 0; k < renaming_substs; ++k) {
      TeVariable h = table.terms.at(holes[k].name);
      Te u = oracle::convert_back(gen.term(holes[k].type, ctx), table);
      r = subst(unbox(bind_var(h, lift_te(r))), u);
    }
    if (scope.terms.empty()) {
      for (const auto& b : ctx) {
        const auto& v = table.terms.at(b.name);
        scope.terms.emplace(v.name(), v);
      }
      for (const auto& [name, v] : table.types) scope.types.emplace(v.name(), v);
    }

    for (const Te& t : {r, nf(r)}) {
      if (!testgen::ambiguous_binders(t).empty()) ++ambiguous_before;
      Te named = update_names(t);
      if (!testgen::ambiguous_binders(named).empty()) ++ambiguous_after;
      Te back = cli::parse_term(to_string(named), scope);
      if (oracle::alpha_eq(oracle::convert(back), oracle::convert(t))) ++ok;
    }
  }
  std::ostringstream os;
  os << ok << "/" << 2 * done << " round trips, " << ambiguous_before << " captured before renaming, "
     << ambiguous_after << " after";
  return {ok == 2 * done && ambiguous_after == 0 && ambiguous_before > 0, os.str()};
}

Outcome criterion8() {
  std::string src = "(" + testgen::exp_src() + " " + testgen::numeral_src(church_base) + " " +
                    testgen::numeral_src(church_exponent) + ")";
  Te t = testgen::parse_closed(src);
  unsigned expected = 1;
  for (unsigned i = 0; i < church_exponent; ++i) expected *= church_base;
  bool correct = false;
  double secs = 0;
  cli::run_with_stack(cli::big_stack, [&] {
    auto t0 = Clock::now();
    Te n = nf(t);
    secs = seconds_since(t0);
    correct = testgen::is_numeral(n, expected);
  });
  std::ostringstream os;
  os << "2^16 in " << secs << " s, " << (correct ? "numeral 65536" : "wrong result");
  return {correct && secs < church_seconds, os.str()};
}

struct Captured {
  int status;
  std::string out;
};

Captured run_command(const std::string& cmd) {
  Captured c{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, n);
  int st = pclose(p);
  c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return c;
}

Outcome criterion9(const std::string& sysf, const std::string& script) {
  std::string cmd = "'" + sysf + "' '" + script + "'";
  Captured a = run_command(cmd);
  Captured b = run_command(cmd);
  std::ostringstream os;
  os << "exit " << a.status << "/" << b.status << ", " << a.out.size() << " bytes, "
     << (a.out == b.out ? "identical" : "different");
  return {a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <sysf> <golden-script>\n";
    return 2;
  }
  int failed = 0;
  auto report = [&](int n, const char* what, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << what << " (" << o.detail
              << ")" << std::endl;
  };

  DiffStats diff;
  cli::run_with_stack(cli::big_stack, [&] { diff = run_differential(); });
  report(1, "differential normalization", [&] { return criterion1(diff); });
  report(2, "appl example typing", criterion2);
  report(3, "alpha-equivalence sentinel", criterion3);
  report(4, "applicative laws", criterion4);
  report(5, "free-variable algebra", criterion5);
  report(6, "no lookups during subst", [&] { return criterion6(diff); });
  report(7, "renaming round trip", criterion7);
  report(8, "Church 2^16 under 5 s", criterion8);
  report(9, "CLI determinism", [&] { return criterion9(argv[1], argv[2]); });
  return failed == 0 ? 0 : 1;
}
