#ifndef SGX_LAZY_HPP_
#define SGX_LAZY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgx/json.hpp"
#include "sgx/semigroup.hpp"

namespace sgx {

/// Canonical element encoding of a lazy semigroup. Equality is structural:
/// natural numbers are {n}, reduced fractions {num, den}, finite-support
/// bit-vectors their sorted support list.
using LazyElem = std::vector<std::int64_t>;

/// Structural facts a family constructor certifies. Each declared fact is
/// spot-verified on an enumerated prefix at construction.
struct LazyFacts {
  bool group = false;
  bool commutative = false;
  bool torsion = false;
  bool no_idempotents = false;
  bool pairwise_absorptive = false;  // xy in {x,y} for all pairs
  bool null_over_zero = false;       // all products equal enumerate(0)
  std::optional<std::int64_t> exponent;

  Json to_json() const;
};

/// Countable enumerable semigroup with a computable product and decidable
/// (structural) equality. Enumeration is a pure function of the index, so
/// values are safe to share between threads.
class LazySemigroup {
 public:
  struct Config {
    std::size_t fact_depth = 32;   // elements used to spot-verify facts
    std::size_t assoc_depth = 8;   // elements used to spot-check associativity
  };

  LazySemigroup(std::string name, std::function<LazyElem(std::size_t)> enumerate,
                std::function<LazyElem(const LazyElem&, const LazyElem&)> product,
                std::function<std::string(const LazyElem&)> show, LazyFacts facts,
                std::optional<std::size_t> carrier_size = std::nullopt,
                Config config = Config{});

  const std::string& name() const noexcept { return name_; }
  const LazyFacts& facts() const noexcept { return facts_; }
  /// Present only for genuinely finite carriers (finite_wrap).
  std::optional<std::size_t> carrier_size() const noexcept { return carrier_size_; }

  LazyElem at(std::size_t i) const;
  LazyElem product(const LazyElem& a, const LazyElem& b) const { return product_(a, b); }
  std::string show(const LazyElem& e) const { return show_(e); }

 private:
  void verify_facts(const Config& config) const;

  std::string name_;
  std::function<LazyElem(std::size_t)> enumerate_;
  std::function<LazyElem(const LazyElem&, const LazyElem&)> product_;
  std::function<std::string(const LazyElem&)> show_;
  LazyFacts facts_;
  std::optional<std::size_t> carrier_size_;
};

// -- built-in families -------------------------------------------------------

/// (N, +), naturals from 1. Facts: commutative, no-idempotents.
LazySemigroup naturals_plus();

/// (omega, min). Facts: commutative, pairwise-absorptive, exponent(1).
LazySemigroup omega_min();

/// {0, a1, a2, ...} with every product 0. Facts: commutative, null-over-zero,
/// exponent(2).
LazySemigroup infinite_null();

/// p-power roots of unity: reduced fractions k/p^n under addition mod 1,
/// enumerated by increasing denominator level. Facts: group, commutative,
/// torsion. Throws NotPrime.
LazySemigroup quasicyclic(std::int64_t p);

/// Finite-support bit-vectors under pointwise xor. Facts: group, commutative,
/// exponent(2).
LazySemigroup bounded_boolean();

/// Lazy view of a finite semigroup; facts are computed exactly from the
/// table, and the carrier size is recorded so deciders can be exhaustive.
LazySemigroup finite_wrap(const FiniteSemigroup& s);

/// Parses "name" or "name:param" into a built-in family. Throws
/// UnknownFamily / NotPrime.
LazySemigroup family_from_spec(const std::string& spec);

}  // namespace sgx

#endif  // SGX_LAZY_HPP_
