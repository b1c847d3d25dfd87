#include "systemf/normalize.hpp"

#include <string>

namespace systemf {

using bindcore::bind_var;
using bindcore::subst;
using bindcore::unbind;
using bindcore::unbox;

BudgetExhausted::BudgetExhausted(std::uint64_t limit)
    : std::runtime_error("beta-step budget of " + std::to_string(limit) + " exhausted"),
      limit_(limit) {}

namespace {

void tick(StepBudget* budget) {
  if (budget != nullptr) budget->step();
}

Te hnf_impl(const Te& t, StepBudget* budget) {
  if (auto app = t.as<TeApp>()) {
    Te v = hnf_impl(app->arg, budget);
    Te h = hnf_impl(app->fun, budget);
    if (auto abs = h.as<TeAbs>()) {
      tick(budget);
      return hnf_impl(subst(abs->body, v), budget);
    }
    return Te::app(h, v);
  }
  if (auto spe = t.as<TeSpe>()) {
    Te h = hnf_impl(spe->fun, budget);
    if (auto lam = h.as<TeLam>()) {
      tick(budget);
      return hnf_impl(subst(lam->body, spe->arg), budget);
    }
    return Te::spe(h, spe->arg);
  }
  return t;
}

Te nf_impl(const Te& t, StepBudget* budget) {
  if (t.as<TeVar>()) return t;
  if (auto abs = t.as<TeAbs>()) {
    auto [x, body] = unbind(abs->body);
    return Te::abs(abs->dom, unbox(bind_var(x, lift_te(nf_impl(body, budget)))));
  }
  if (auto app = t.as<TeApp>()) {
    Te u = nf_impl(app->arg, budget);
    Te h = nf_impl(app->fun, budget);
    if (auto abs = h.as<TeAbs>()) {
      tick(budget);
      return nf_impl(subst(abs->body, u), budget);
    }
    return Te::app(h, u);
  }
  if (auto lam = t.as<TeLam>()) {
    auto [x, body] = unbind(lam->body);
    return Te::lam(unbox(bind_var(x, lift_te(nf_impl(body, budget)))));
  }
  const auto& spe = std::get<TeSpe>(t.node());
  Te h = nf_impl(spe.fun, budget);
  if (auto lam = h.as<TeLam>()) {
    tick(budget);
    return nf_impl(subst(lam->body, spe.arg), budget);
  }
  return Te::spe(h, spe.arg);
}

}  // namespace

Te hnf(const Te& t) { return hnf_impl(t, nullptr); }
Te hnf(const Te& t, StepBudget& budget) { return hnf_impl(t, &budget); }

Te nf(const Te& t) { return nf_impl(t, nullptr); }
Te nf(const Te& t, StepBudget& budget) { return nf_impl(t, &budget); }

}  // namespace systemf
