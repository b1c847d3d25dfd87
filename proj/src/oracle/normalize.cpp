#include "oracle/normalize.hpp"

namespace oracle {

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::uint64_t max_steps) : remaining_(max_steps) {}

  NamedTe nf(const NamedTe& t) {
    if (t.as<NamedTe::Var>()) return t;
    if (auto a = t.as<NamedTe::Abs>()) return NamedTe::abs(a->name, a->dom, nf(a->body));
    if (auto p = t.as<NamedTe::App>()) {
      NamedTe u = nf(p->arg);
      NamedTe h = nf(p->fun);
      if (auto a = h.as<NamedTe::Abs>()) {
        step();
        return nf(naive_subst(a->body, a->name, u));
      }
      return NamedTe::app(h, u);
    }
    if (auto l = t.as<NamedTe::Lam>()) return NamedTe::lam(l->name, nf(l->body));
    const auto& s = std::get<NamedTe::Spe>(t.node());
    NamedTe h = nf(s.fun);
    if (auto l = h.as<NamedTe::Lam>()) {
      step();
      return nf(naive_subst_ty(l->body, l->name, s.arg));
    }
    return NamedTe::spe(h, s.arg);
  }

 private:
  void step() {
    if (remaining_ == 0) throw OracleBudgetExhausted();
    --remaining_;
  }

  std::uint64_t remaining_;
};

}  // namespace

NamedTe oracle_nf(const NamedTe& t, std::uint64_t max_steps) { return Normalizer(max_steps).nf(t); }

}  // namespace oracle
