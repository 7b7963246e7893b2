#ifndef SGX_SEMIGROUP_HPP_
#define SGX_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgx/error.hpp"

namespace sgx {

/// A finite semigroup given by a validated Cayley table.
///
/// Elements are referenced by 0-based index; names are display-only.
/// Values are immutable after validation and safe to share between threads.
class FiniteSemigroup {
 public:
  /// Validates and builds a semigroup. Throws Error with code NonSquare,
  /// IndexOutOfRange, or NotAssociative (reporting the first violating
  /// triple in lexicographic (i,j,k) order).
  static FiniteSemigroup validate(std::vector<std::string> names,
                                  const std::vector<std::vector<int>>& table);

  int order() const noexcept { return order_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name_of(int x) const { return names_.at(static_cast<std::size_t>(x)); }

  /// Product of elements by index.
  int at(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(j)];
  }

  /// Row-major flattened table.
  const std::vector<int>& flat_table() const noexcept { return table_; }
  std::vector<std::vector<int>> rows() const;

  /// Index of the element with the given display name, if any.
  std::optional<int> index_of(const std::string& name) const;

  bool is_commutative() const;
  /// Two-sided identity, if the semigroup is a monoid.
  std::optional<int> identity() const;

 private:
  FiniteSemigroup(std::vector<std::string> names, std::vector<int> table, int order)
      : names_(std::move(names)), table_(std::move(table)), order_(order) {}

  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major, order*order
  int order_;
};

/// Sorted duplicate-free set of element indices of some semigroup.
struct ElementSet {
  std::vector<int> members;

  ElementSet() = default;
  explicit ElementSet(std::vector<int> xs);

  /// Validates all members against the carrier of `s`.
  static ElementSet checked(const FiniteSemigroup& s, std::vector<int> xs);

  bool contains(int x) const;
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }

  bool operator==(const ElementSet&) const = default;

  ElementSet set_union(const ElementSet& other) const;
  ElementSet set_intersection(const ElementSet& other) const;
  ElementSet set_difference(const ElementSet& other) const;
  /// Complement within a carrier of the given order.
  ElementSet complement(int order) const;

  static ElementSet full(int order);

  std::vector<std::string> names_in(const FiniteSemigroup& s) const;
};

/// x^n for n >= 1.
int power(const FiniteSemigroup& s, int x, std::int64_t n);

/// Power trace of one element: the first repeat-free run of powers
/// x, x^2, ..., the preperiod length ("index") and cycle length ("period"),
/// and the least exponent whose power is idempotent.
struct PowerTrace {
  std::vector<int> powers;  // powers[k] = x^(k+1), up to the first repetition
  int index;                // least i >= 1 with x^i in the cycle
  int period;               // cycle length
  std::int64_t least_idempotent_exponent;  // least n >= 1 with x^n idempotent
};
PowerTrace power_trace(const FiniteSemigroup& s, int x);

// -- constructions ----------------------------------------------------------

/// Adjoins an absorbing zero at the last index. The original table is
/// embedded bit-exactly.
FiniteSemigroup zero_extension(const FiniteSemigroup& s);

/// Adjoins a two-sided identity at the last index.
FiniteSemigroup one_extension(const FiniteSemigroup& s);

/// Smallest product-closed superset of `seeds`. Throws EmptySeed.
ElementSet generated_subsemigroup(const FiniteSemigroup& s, const ElementSet& seeds);

/// Restriction of `s` to a product-closed subset, keeping names.
/// Throws Error("IndexOutOfRange") if the subset is not closed.
FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const ElementSet& closed_subset);

/// True iff map(xy) = map(x)map(y) for all pairs. `map` must be total on the
/// carrier of `s` with values in the carrier of `t`.
bool is_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                     const std::vector<int>& map);

/// A product-preserving bijection S -> T if one exists. Deterministic for
/// fixed inputs; backtracking is seeded by invariant fingerprints
/// (idempotency, power index/period, iteratively refined row/column
/// neighborhood colors).
std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s,
                                                 const FiniteSemigroup& t);

}  // namespace sgx

#endif  // SGX_SEMIGROUP_HPP_
