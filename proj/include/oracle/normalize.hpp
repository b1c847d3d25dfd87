#ifndef ORACLE_NORMALIZE_HPP
#define ORACLE_NORMALIZE_HPP

#include <cstdint>
#include <stdexcept>

#include "oracle/named.hpp"

namespace oracle {

class OracleBudgetExhausted : public std::runtime_error {
 public:
  OracleBudgetExhausted() : std::runtime_error("oracle beta-step budget exhausted") {}
};

/// Reference beta normalizer over named terms, using the same strategy as
/// the library normalizer (argument before function, then contract).
/// Throws OracleBudgetExhausted after `max_steps` contractions.
NamedTe oracle_nf(const NamedTe& t, std::uint64_t max_steps = 1'000'000);

}  // namespace oracle

#endif  // ORACLE_NORMALIZE_HPP
