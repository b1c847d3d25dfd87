#ifndef SYSTEMF_NORMALIZE_HPP
#define SYSTEMF_NORMALIZE_HPP

#include <cstdint>
#include <stdexcept>

#include "systemf/ast.hpp"

namespace systemf {

/// Thrown when a StepBudget runs out.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t limit);
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Bounds the number of beta steps (term or type) a normalization may take.
class StepBudget {
 public:
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}

  void step() {
    if (used_ == limit_) throw BudgetExhausted(limit_);
    ++used_;
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Head normal form, right-to-left call-by-value. Never goes under binders.
Te hnf(const Te& t);
Te hnf(const Te& t, StepBudget& budget);

/// Beta normal form. May diverge on ill-typed input.
Te nf(const Te& t);
Te nf(const Te& t, StepBudget& budget);

}  // namespace systemf

#endif  // SYSTEMF_NORMALIZE_HPP
