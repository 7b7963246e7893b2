#ifndef SGX_QUOTIENTS_HPP_
#define SGX_QUOTIENTS_HPP_

#include <utility>
#include <vector>

#include "sgx/semigroup.hpp"

namespace sgx {

/// Partition of a carrier closed under left and right translation.
struct Congruence {
  std::vector<int> class_of;  // element index -> class index, classes numbered
                              // by first occurrence
  int num_classes = 0;

  bool operator==(const Congruence&) const = default;
  bool related(int x, int y) const {
    return class_of[static_cast<std::size_t>(x)] == class_of[static_cast<std::size_t>(y)];
  }
};

/// True iff IS u SI is contained in I. The empty set is an ideal.
bool is_ideal(const FiniteSemigroup& s, const ElementSet& i);

inline constexpr int kIdealEnumerationBound = 12;
inline constexpr int kCongruenceEnumerationBound = 6;

/// All ideals including the empty set and the carrier, sorted by size then
/// lexicographically. Powerset filtering up to order 6, unions of principal
/// ideals beyond that. Throws CarrierTooLarge above `bound`.
std::vector<ElementSet> enumerate_ideals(const FiniteSemigroup& s,
                                         int bound = kIdealEnumerationBound);

struct QuotientResult {
  FiniteSemigroup semigroup;
  std::vector<int> map;  // element index in S -> element index in quotient
};

/// Rees quotient: collapse a (possibly empty) ideal to an absorbing sink at
/// the last index. For I empty, returns S and the identity map. Throws
/// NotAnIdeal.
QuotientResult rees_quotient(const FiniteSemigroup& s, const ElementSet& ideal);

/// The congruence whose classes are I and all singletons outside I.
Congruence rees_congruence(const FiniteSemigroup& s, const ElementSet& ideal);

/// Least congruence containing the given pairs: alternates equivalence
/// closure with left/right translation closure until stable.
Congruence congruence_closure(const FiniteSemigroup& s,
                              const std::vector<std::pair<int, int>>& pairs);

/// Quotient by a congruence. Rechecks compatibility; throws
/// IncompatiblePartition if the input violates the congruence invariants.
QuotientResult quotient(const FiniteSemigroup& s, const Congruence& c);

/// All congruences, via joins of principal congruences. Sorted with the
/// identity congruence first (descending class count, then lexicographic).
/// Throws CarrierTooLarge above `bound`.
std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s,
                                              int bound = kCongruenceEnumerationBound);

}  // namespace sgx

#endif  // SGX_QUOTIENTS_HPP_
