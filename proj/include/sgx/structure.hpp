#ifndef SGX_STRUCTURE_HPP_
#define SGX_STRUCTURE_HPP_

#include <utility>
#include <vector>

#include "sgx/json.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

/// E(S) = {x : xx = x}.
ElementSet idempotents(const FiniteSemigroup& s);

/// Natural partial order on idempotents: x <= y iff xy = yx = x.
struct IdempotentOrder {
  ElementSet idems;
  std::vector<std::pair<int, int>> le;  // all pairs x <= y, lexicographic

  bool leq(int x, int y) const;
  /// Strict down-set of e among idempotents.
  ElementSet strictly_below(int e) const;
};
IdempotentOrder natural_order(const FiniteSemigroup& s);

/// Partition of the carrier into H-classes, computed by comparing principal
/// left and right ideals in the one-extension: xS^1 = {x} u xS, S^1x = {x} u Sx.
struct HClassDecomposition {
  std::vector<ElementSet> classes;  // sorted by least member
  std::vector<int> class_of;       // element index -> class index
  std::vector<bool> group_flags;   // class contains an idempotent

  const ElementSet& class_containing(int x) const {
    return classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(x)])];
  }
};
HClassDecomposition h_classes(const FiniteSemigroup& s);
ElementSet h_class(const FiniteSemigroup& s, int a);

/// The maximal subgroup H_e together with the inverse of each member,
/// x x^-1 = x^-1 x = e. Group axioms are re-verified rather than trusted;
/// a failure means the H-class computation is broken. Throws NotIdempotent.
struct MaximalSubgroup {
  int e;
  ElementSet members;
  std::vector<int> inverse_of;  // parallel to members.members

  int inverse(int x) const;
};
MaximalSubgroup maximal_subgroup(const FiniteSemigroup& s, int e);

/// Clifford part H(S): union of all maximal subgroups.
ElementSet clifford_part(const FiniteSemigroup& s);

/// Z(S) = {z : zx = xz for all x}.
ElementSet center(const FiniteSemigroup& s);

/// IZ(S) = {z in Z(S) : zS within Z(S)}: the largest ideal contained in the
/// center. Verified to be an ideal contained in Z(S) before returning.
ElementSet ideal_center(const FiniteSemigroup& s);

/// {x : x^n in A}.
ElementSet roots(const FiniteSemigroup& s, const ElementSet& a, std::int64_t n);
/// Union of roots over all n >= 1; exact, using each element's power cycle.
ElementSet roots_all(const FiniteSemigroup& s, const ElementSet& a);

/// H_e/e = {x : xe = ex in H_e}. Throws NotIdempotent.
ElementSet coideal_of(const FiniteSemigroup& s, int e);

/// Idempotents e whose set S \ (H_e/e) is an ideal (the empty set counts).
ElementSet viable_idempotents(const FiniteSemigroup& s);

/// True iff every central idempotent is viable.
bool is_z_viable(const FiniteSemigroup& s);

/// G_a = {x in H_e : ax = ae}. Requires e idempotent and a outside H_e/e;
/// throws NotIdempotent / NotOutsideCoideal.
ElementSet g_subgroup(const FiniteSemigroup& s, int e, int a);

/// The per-semigroup structure summary.
struct StructureReport {
  ElementSet idems;
  IdempotentOrder order;
  HClassDecomposition h;
  ElementSet center_set;
  ElementSet ideal_center_set;
  ElementSet viable;
  ElementSet clifford;

  /// Stable field order: idempotents, order pairs, H-classes, center,
  /// ideal center, viable idempotents, Clifford part.
  Json to_json(const FiniteSemigroup& s) const;
};
StructureReport compute_structure_report(const FiniteSemigroup& s);

}  // namespace sgx

#endif  // SGX_STRUCTURE_HPP_
