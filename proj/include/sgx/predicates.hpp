#ifndef SGX_PREDICATES_HPP_
#define SGX_PREDICATES_HPP_

#include "sgx/lazy.hpp"
#include "sgx/semigroup.hpp"
#include "sgx/verdict.hpp"

namespace sgx {

inline constexpr std::int64_t kDefaultBudget = 256;

/// Budget accounting: one unit per product evaluation.
class BudgetMeter {
 public:
  explicit BudgetMeter(std::int64_t limit) : limit_(limit) {}

  /// Charges n units; returns false (and marks exhaustion) if that would
  /// exceed the limit.
  bool charge(std::int64_t n = 1) {
    if (used_ + n > limit_) {
      exhausted_ = true;
      return false;
    }
    used_ += n;
    return true;
  }
  std::int64_t used() const noexcept { return used_; }
  std::int64_t limit() const noexcept { return limit_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
  bool exhausted_ = false;
};

// -- exact deciders on finite carriers ---------------------------------------
// These never return Unknown. chain_finite, periodic, bounded, group_finite,
// group_bounded and clifford_plus_finite always hold on a finite carrier;
// singular always fails. The verdicts still recompute their full-check data.

Verdict chain_finite(const FiniteSemigroup& s);
Verdict singular(const FiniteSemigroup& s);
Verdict nonsingular(const FiniteSemigroup& s);
Verdict periodic(const FiniteSemigroup& s);
/// Holds with the least uniform exponent in witness["exponent"].
Verdict bounded(const FiniteSemigroup& s);
Verdict group_finite(const FiniteSemigroup& s);
Verdict group_bounded(const FiniteSemigroup& s);
Verdict clifford_plus_finite(const FiniteSemigroup& s);

// -- budgeted semi-deciders on lazy carriers ---------------------------------
// A finite wrapped carrier is materialized (its table rebuilt from the
// enumeration, charged to the budget) and decided exactly. On infinite
// carriers, Holds needs a certified fact; Fails carries a recheckable
// witness found within the budget; otherwise the verdict is Unknown.

Verdict chain_finite(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict singular(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict nonsingular(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict periodic(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict bounded(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict group_finite(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict group_bounded(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);
Verdict clifford_plus_finite(const LazySemigroup& s, std::int64_t budget = kDefaultBudget);

/// Evaluates a predicate by name ("chain_finite", "singular", "nonsingular",
/// "periodic", "bounded", "group_finite", "group_bounded",
/// "clifford_plus_finite"). Throws UnknownPredicate.
Verdict evaluate_predicate(const std::string& name, const LazySemigroup& s,
                           std::int64_t budget = kDefaultBudget);

/// Re-verifies a witness-carrying verdict directly against the carrier:
/// pair products for chain/singularity witnesses, power traces for order and
/// periodicity witnesses, distinctness for infinite-subgroup witnesses.
/// Verdicts without a witness payload recheck vacuously as true.
bool recheck_witness(const LazySemigroup& s, const Verdict& v);

}  // namespace sgx

#endif  // SGX_PREDICATES_HPP_
