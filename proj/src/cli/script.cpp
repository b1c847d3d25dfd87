#include "cli/script.hpp"

#include "bindcore/debug.hpp"
#include "systemf/normalize.hpp"
#include "systemf/typing.hpp"

namespace cli {

using namespace systemf;

namespace {

struct Failure {
  int exit;
  SourcePos pos;
  std::string code;
  std::string message;
};

void report(std::ostream& err, const std::string& filename, const Failure& f) {
  err << filename << ':' << f.pos.line << ':' << f.pos.column << ": " << f.code << ": " << f.message
      << '\n';
}

Failure type_failure(const TypeError& e, SourcePos pos) {
  return {exit_user_error, pos, std::string(code_name(e.code())), e.what()};
}

class Runner {
 public:
  Runner(const RunOptions& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void operator()(const Def& d) {
    if (d.type) {
      check(Context{}, d.term, *d.type);
    } else {
      infer(Context{}, d.term);
    }
  }

  void operator()(const AssertType& a) { check(Context{}, a.term, a.type); }

  void operator()(const Eval& e) {
    infer(Context{}, e.term);
    StepBudget budget(opts_.steps);
    emit(nf(e.term, budget));
  }

  void operator()(const Print& p) { emit(p.term); }

 private:
  void emit(const Te& t) {
    print_te(out_, update_names(t), opts_.syntax);
    out_ << '\n';
  }

  const RunOptions& opts_;
  std::ostream& out_;
};

SourcePos position(const Statement& s) {
  return std::visit([](const auto& x) { return x.pos; }, s);
}

}  // namespace

int run(const Script& script, const RunOptions& opts, std::ostream& out, std::ostream& err,
        const std::string& filename) {
  Runner runner(opts, out);
  for (const Statement& s : script.statements) {
    try {
      std::visit(runner, s);
    } catch (const TypeError& e) {
      report(err, filename, type_failure(e, position(s)));
      return exit_user_error;
    } catch (const BudgetExhausted& e) {
      report(err, filename,
             {exit_budget, position(s), "budget-exhausted",
              "normalization exceeded " + std::to_string(e.limit()) + " beta steps"});
      return exit_budget;
    }
  }
  return exit_ok;
}

int run_source(std::string_view source, const std::string& filename, const RunOptions& opts,
               std::ostream& out, std::ostream& err) {
  const bool was_enabled = bindcore::debug::enabled();
  if (opts.debug) bindcore::debug::set_enabled(true);
  std::uint64_t before = bindcore::debug::phase1_lookups();
  int rc;
  try {
    Script script = parse_script(source);
    rc = run(script, opts, out, err, filename);
  } catch (const ParseError& e) {
    report(err, filename, {exit_user_error, e.pos(), e.code(), e.what()});
    rc = exit_user_error;
  }
  if (opts.debug) {
    err << filename << ": debug: phase1 lookups " << bindcore::debug::phase1_lookups() - before << '\n';
    bindcore::debug::set_enabled(was_enabled);
  }
  out.flush();
  return rc;
}

}  // namespace cli
