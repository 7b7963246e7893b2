#include "sgx/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgx/structure.hpp"

namespace sgx {

namespace {

// Witness search parameters. All searches sweep the enumeration order, so
// verdicts are deterministic for a fixed budget.
constexpr std::size_t kMaxSetWitness = 64;     // absorbed / null witness sets
constexpr std::size_t kDistinctWitness = 16;   // infinite-subgroup witnesses
constexpr int kEscalation = 3;                 // strictly increasing exponents > 1
constexpr std::int64_t kMaxPowerWitness = 4096;

Json set_witness(const LazySemigroup& s, const std::vector<std::size_t>& indices) {
  Json idx = Json::array();
  Json shown = Json::array();
  for (std::size_t i : indices) {
    idx.push_back(i);
    shown.push_back(s.show(s.at(i)));
  }
  return Json{{"indices", idx}, {"elements", shown}};
}

Verdict unknown(const std::string& pred, const BudgetMeter& meter) {
  return Verdict(pred, Status::Unknown, nullptr, meter.used(), "");
}

// -- finite helpers ----------------------------------------------------------

std::int64_t least_uniform_exponent(const FiniteSemigroup& s, std::int64_t* lookups) {
  std::int64_t lcm_periods = 1;
  std::int64_t max_index = 1;
  for (int x = 0; x < s.order(); ++x) {
    const auto t = power_trace(s, x);
    if (lookups) *lookups += static_cast<std::int64_t>(t.powers.size());
    lcm_periods = std::lcm(lcm_periods, static_cast<std::int64_t>(t.period));
    max_index = std::max(max_index, static_cast<std::int64_t>(t.index));
  }
  std::int64_t n = lcm_periods;
  while (n < max_index) n += lcm_periods;
  return n;
}

// Exponent of the group H_e: least k with x^k = e for all members.
std::int64_t subgroup_exponent(const FiniteSemigroup& s, const MaximalSubgroup& g) {
  std::int64_t exp = 1;
  for (int x : g.members.members) {
    std::int64_t k = 1;
    int acc = x;
    while (acc != g.e) {
      acc = s.at(acc, x);
      ++k;
    }
    exp = std::lcm(exp, k);
  }
  return exp;
}

}  // namespace

// -- exact deciders ----------------------------------------------------------

Verdict chain_finite(const FiniteSemigroup& s) {
  // No infinite subsets exist, so the condition is vacuous.
  return Verdict("chain_finite", Status::Holds, Json{{"carrier_order", s.order()}}, 0,
                 "finite-carrier");
}

Verdict singular(const FiniteSemigroup& s) {
  return Verdict("singular", Status::Fails, Json{{"carrier_order", s.order()}}, 0,
                 "finite-carrier");
}

Verdict nonsingular(const FiniteSemigroup& s) { return singular(s).negated("nonsingular"); }

Verdict periodic(const FiniteSemigroup& s) {
  std::int64_t lookups = 0;
  std::int64_t max_exp = 1;
  for (int x = 0; x < s.order(); ++x) {
    const auto t = power_trace(s, x);
    lookups += static_cast<std::int64_t>(t.powers.size());
    max_exp = std::max(max_exp, t.least_idempotent_exponent);
  }
  return Verdict("periodic", Status::Holds,
                 Json{{"carrier_order", s.order()}, {"max_element_exponent", max_exp}}, lookups,
                 "finite-carrier");
}

Verdict bounded(const FiniteSemigroup& s) {
  std::int64_t lookups = 0;
  const std::int64_t n = least_uniform_exponent(s, &lookups);
  Json witness{{"exponent", n}};
  if (n > 1) {
    // Minimality: some element fails at n-1.
    int bad = -1;
    for (int x = 0; x < s.order() && bad < 0; ++x) {
      const int p = power(s, x, n - 1);
      lookups += n - 1;
      if (s.at(p, p) != p) bad = x;
    }
    witness["minimality_witness"] = bad < 0 ? Json(nullptr) : Json(s.name_of(bad));
  }
  return Verdict("bounded", Status::Holds, witness, lookups, "finite-carrier");
}

Verdict group_finite(const FiniteSemigroup& s) {
  const auto d = h_classes(s);
  std::size_t max_order = 0;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (d.group_flags[c]) max_order = std::max(max_order, d.classes[c].size());
  }
  return Verdict("group_finite", Status::Holds, Json{{"max_subgroup_order", max_order}},
                 static_cast<std::int64_t>(s.order()) * s.order(), "finite-carrier");
}

Verdict group_bounded(const FiniteSemigroup& s) {
  std::int64_t max_exp = 1;
  for (int e : idempotents(s).members) {
    max_exp = std::max(max_exp, subgroup_exponent(s, maximal_subgroup(s, e)));
  }
  return Verdict("group_bounded", Status::Holds, Json{{"max_subgroup_exponent", max_exp}},
                 static_cast<std::int64_t>(s.order()) * s.order(), "finite-carrier");
}

Verdict clifford_plus_finite(const FiniteSemigroup& s) {
  const auto h = clifford_part(s);
  const auto count = static_cast<std::int64_t>(s.order()) - static_cast<std::int64_t>(h.size());
  return Verdict("clifford_plus_finite", Status::Holds, Json{{"non_clifford_count", count}},
                 static_cast<std::int64_t>(s.order()) * s.order(), "finite-carrier");
}

// -- lazy path ----------------------------------------------------------------

namespace {

// Rebuilds the Cayley table of a finite wrapped carrier from enumerate and
// product, charging every product evaluation.
std::optional<FiniteSemigroup> materialize(const LazySemigroup& s, BudgetMeter& meter) {
  if (!s.carrier_size()) return std::nullopt;
  const auto n = *s.carrier_size();
  if (!meter.charge(static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n))) {
    return std::nullopt;
  }
  std::vector<LazyElem> elems;
  elems.reserve(n);
  for (std::size_t i = 0; i < n; ++i) elems.push_back(s.at(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(s.show(elems[i]));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const LazyElem p = s.product(elems[i], elems[j]);
      const auto it = std::find(elems.begin(), elems.end(), p);
      if (it == elems.end()) {
        throw Error("FactVerificationFailed",
                    s.name() + ": finite carrier is not closed under the product");
      }
      table[i][j] = static_cast<int>(it - elems.begin());
    }
  }
  return FiniteSemigroup::validate(std::move(names), table);
}

// Local exponent of one enumerated element: least k >= 1 with x^k idempotent,
// computed by stepping powers and testing idempotency, within budget.
std::optional<std::int64_t> local_exponent(const LazySemigroup& s, const LazyElem& x,
                                           BudgetMeter& meter) {
  LazyElem acc = x;
  for (std::int64_t k = 1;; ++k) {
    if (!meter.charge(1)) return std::nullopt;
    if (s.product(acc, acc) == acc) return k;
    if (!meter.charge(1)) return std::nullopt;
    acc = s.product(acc, x);
  }
}

// Escalating strictly-increasing local exponents > 1 over the enumeration
// prefix. Reaching kEscalation of them refutes every candidate bound seen.
Verdict unbounded_exponent_search(const std::string& pred, const LazySemigroup& s,
                                  BudgetMeter& meter, const std::string& certificate) {
  std::int64_t best = 1;
  Json orders = Json::array();
  int increases = 0;
  for (std::size_t i = 0;; ++i) {
    if (meter.exhausted()) break;
    const LazyElem x = s.at(i);
    const auto l = local_exponent(s, x, meter);
    if (!l) break;
    if (*l > best) {
      best = *l;
      if (*l > 1) {
        orders.push_back(Json{{"index", i}, {"element", s.show(x)}, {"exponent", *l}});
        ++increases;
      }
    }
    if (increases >= kEscalation) {
      return Verdict(pred, Status::Fails, Json{{"orders", orders}}, meter.used(), certificate);
    }
  }
  return unknown(pred, meter);
}

std::size_t absorbed_witness_target(std::int64_t budget) {
  std::size_t w = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 4.0 * static_cast<double>(budget))) / 2.0);
  return std::min(w, kMaxSetWitness);
}

}  // namespace

Verdict chain_finite(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = chain_finite(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.group) {
    // Any three distinct group elements contain a pair x,y with xy outside
    // {x,y}; infinite absorbed subsets cannot exist.
    return Verdict("chain_finite", Status::Holds, nullptr, meter.used(), "group");
  }
  const std::size_t target = absorbed_witness_target(budget);
  if (target >= 4) {
    // Greedy absorbed set over the enumeration prefix: every ordered pair of
    // distinct members multiplies into the pair.
    std::vector<std::size_t> picked;
    std::vector<LazyElem> elems;
    for (std::size_t i = 0; !meter.exhausted() && picked.size() < target; ++i) {
      const LazyElem x = s.at(i);
      bool ok = true;
      for (const LazyElem& y : elems) {
        if (!meter.charge(2)) {
          ok = false;
          break;
        }
        const LazyElem xy = s.product(x, y), yx = s.product(y, x);
        if ((xy != x && xy != y) || (yx != x && yx != y)) {
          ok = false;
          break;
        }
      }
      if (meter.exhausted()) break;
      if (ok) {
        picked.push_back(i);
        elems.push_back(x);
      }
    }
    if (picked.size() >= target) {
      return Verdict("chain_finite", Status::Fails, set_witness(s, picked), meter.used(),
                     f.pairwise_absorptive ? "pairwise-absorptive" : "");
    }
  }
  return unknown("chain_finite", meter);
}

Verdict singular(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = singular(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.null_over_zero) {
    const auto w = std::min<std::size_t>(kMaxSetWitness,
                                         static_cast<std::size_t>(std::sqrt(static_cast<double>(budget))));
    if (w >= 3) {
      const LazyElem zero = s.at(0);
      std::vector<std::size_t> picked;
      bool ok = true;
      for (std::size_t i = 1; i <= w && ok; ++i) picked.push_back(i);
      for (std::size_t a = 0; a < picked.size() && ok; ++a) {
        for (std::size_t b = 0; b < picked.size() && ok; ++b) {
          ok = meter.charge(1) && s.product(s.at(picked[a]), s.at(picked[b])) == zero;
        }
      }
      if (ok) {
        Json witness = set_witness(s, picked);
        witness["product_elem"] = zero;
        witness["product"] = s.show(zero);
        return Verdict("singular", Status::Holds, witness, meter.used(), "null-over-zero");
      }
    }
    return unknown("singular", meter);
  }
  if (f.group) {
    // In a group |AA| >= |aA| = |A|, so AA is never a singleton for |A| >= 2.
    const std::size_t k = 8;
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < k; ++i) picked.push_back(i);
    return Verdict("singular", Status::Fails, set_witness(s, picked), meter.used(), "group");
  }
  return unknown("singular", meter);
}

Verdict nonsingular(const LazySemigroup& s, std::int64_t budget) {
  return singular(s, budget).negated("nonsingular");
}

Verdict periodic(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = periodic(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.exponent) {
    return Verdict("periodic", Status::Holds, Json{{"exponent", *f.exponent}}, meter.used(),
                   "exponent(" + std::to_string(*f.exponent) + ")");
  }
  if (f.torsion) {
    return Verdict("periodic", Status::Holds, nullptr, meter.used(), "torsion");
  }
  if (f.no_idempotents) {
    // First enumerated element: its power run can contain no idempotent;
    // exhibit pairwise-distinct powers as far as the budget allows.
    const std::int64_t m = std::min(kMaxPowerWitness, budget / 2);
    if (m >= 8) {
      const LazyElem x = s.at(0);
      std::vector<LazyElem> powers{x};
      bool distinct = true;
      LazyElem acc = x;
      for (std::int64_t k = 2; k <= m && distinct; ++k) {
        if (!meter.charge(1)) break;
        acc = s.product(acc, x);
        distinct = std::find(powers.begin(), powers.end(), acc) == powers.end();
        if (distinct) powers.push_back(acc);
      }
      if (static_cast<std::int64_t>(powers.size()) == m) {
        return Verdict("periodic", Status::Fails,
                       Json{{"index", 0},
                            {"element", s.show(x)},
                            {"powers_checked", m}},
                       meter.used(), "no-idempotents");
      }
    }
  }
  return unknown("periodic", meter);
}

Verdict bounded(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = bounded(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.exponent) {
    return Verdict("bounded", Status::Holds, Json{{"exponent", *f.exponent}}, meter.used(),
                   "exponent(" + std::to_string(*f.exponent) + ")");
  }
  return unbounded_exponent_search("bounded", s, meter, f.group ? "group" : "");
}

Verdict group_finite(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = group_finite(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.no_idempotents) {
    return Verdict("group_finite", Status::Holds, nullptr, meter.used(), "no-idempotents");
  }
  if (f.exponent && *f.exponent == 1) {
    // A band: every subgroup is a single idempotent.
    return Verdict("group_finite", Status::Holds, nullptr, meter.used(), "exponent(1)");
  }
  if (f.null_over_zero) {
    return Verdict("group_finite", Status::Holds, nullptr, meter.used(), "null-over-zero");
  }
  if (f.pairwise_absorptive) {
    // An absorbed subgroup has at most two elements.
    return Verdict("group_finite", Status::Holds, nullptr, meter.used(), "pairwise-absorptive");
  }
  if (f.group) {
    // The carrier itself is an infinite subgroup: the enumeration is
    // injective, exhibit pairwise distinct members.
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < kDistinctWitness; ++i) picked.push_back(i);
    return Verdict("group_finite", Status::Fails, set_witness(s, picked), meter.used(),
                   "group+injective-enumeration");
  }
  return unknown("group_finite", meter);
}

Verdict group_bounded(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = group_bounded(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.exponent) {
    return Verdict("group_bounded", Status::Holds, Json{{"exponent", *f.exponent}}, meter.used(),
                   "exponent(" + std::to_string(*f.exponent) + ")");
  }
  if (f.no_idempotents) {
    return Verdict("group_bounded", Status::Holds, nullptr, meter.used(), "no-idempotents");
  }
  if (f.null_over_zero) {
    return Verdict("group_bounded", Status::Holds, nullptr, meter.used(), "null-over-zero");
  }
  if (f.pairwise_absorptive) {
    return Verdict("group_bounded", Status::Holds, nullptr, meter.used(), "pairwise-absorptive");
  }
  if (f.group) {
    return unbounded_exponent_search("group_bounded", s, meter, "group");
  }
  return unknown("group_bounded", meter);
}

Verdict clifford_plus_finite(const LazySemigroup& s, std::int64_t budget) {
  BudgetMeter meter(budget);
  if (auto fs = materialize(s, meter)) {
    Verdict v = clifford_plus_finite(*fs);
    v.budget_used = meter.used();
    return v;
  }
  const auto& f = s.facts();
  if (f.group) {
    return Verdict("clifford_plus_finite", Status::Holds, Json{{"non_clifford_count", 0}},
                   meter.used(), "group");
  }
  if (f.exponent && *f.exponent == 1) {
    // A band is a union of trivial subgroups.
    return Verdict("clifford_plus_finite", Status::Holds, Json{{"non_clifford_count", 0}},
                   meter.used(), "exponent(1)");
  }
  if (f.no_idempotents) {
    // No idempotents means no subgroups at all: the complement of the
    // Clifford part is the whole infinite carrier.
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < kDistinctWitness; ++i) picked.push_back(i);
    return Verdict("clifford_plus_finite", Status::Fails, set_witness(s, picked), meter.used(),
                   "no-idempotents");
  }
  if (f.null_over_zero) {
    // Only the zero lies in a subgroup; every nonzero element squares to the
    // zero without being it.
    std::vector<std::size_t> picked;
    for (std::size_t i = 1; i <= kDistinctWitness; ++i) picked.push_back(i);
    Json witness = set_witness(s, picked);
    witness["zero"] = s.show(s.at(0));
    return Verdict("clifford_plus_finite", Status::Fails, witness, meter.used(),
                   "null-over-zero");
  }
  return unknown("clifford_plus_finite", meter);
}

Verdict evaluate_predicate(const std::string& name, const LazySemigroup& s, std::int64_t budget) {
  if (name == "chain_finite") return chain_finite(s, budget);
  if (name == "singular") return singular(s, budget);
  if (name == "nonsingular") return nonsingular(s, budget);
  if (name == "periodic") return periodic(s, budget);
  if (name == "bounded") return bounded(s, budget);
  if (name == "group_finite") return group_finite(s, budget);
  if (name == "group_bounded") return group_bounded(s, budget);
  if (name == "clifford_plus_finite") return clifford_plus_finite(s, budget);
  throw Error("UnknownPredicate", "no predicate named " + name);
}

// -- witness rechecks ---------------------------------------------------------

namespace {

std::vector<std::size_t> witness_indices(const Json& witness) {
  std::vector<std::size_t> out;
  if (witness.is_object() && witness.contains("indices")) {
    for (const auto& v : witness.at("indices")) out.push_back(v.get<std::size_t>());
  }
  return out;
}

bool recheck_absorbed(const LazySemigroup& s, const Json& witness) {
  const auto idx = witness_indices(witness);
  std::vector<LazyElem> elems;
  elems.reserve(idx.size());
  for (auto i : idx) elems.push_back(s.at(i));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = 0; b < elems.size(); ++b) {
      if (a == b) continue;
      const LazyElem p = s.product(elems[a], elems[b]);
      if (p != elems[a] && p != elems[b]) return false;
    }
  }
  return !elems.empty();
}

bool recheck_singleton_square(const LazySemigroup& s, const Json& witness) {
  const auto idx = witness_indices(witness);
  if (idx.empty() || !witness.contains("product_elem")) return false;
  const LazyElem target = witness.at("product_elem").get<LazyElem>();
  for (auto a : idx) {
    for (auto b : idx) {
      if (s.product(s.at(a), s.at(b)) != target) return false;
    }
  }
  return true;
}

bool recheck_aperiodic_element(const LazySemigroup& s, const Json& witness) {
  if (!witness.contains("index") || !witness.contains("powers_checked")) return false;
  const LazyElem x = s.at(witness.at("index").get<std::size_t>());
  const std::int64_t m = witness.at("powers_checked").get<std::int64_t>();
  std::vector<LazyElem> powers{x};
  LazyElem acc = x;
  if (s.product(x, x) == x) return false;
  for (std::int64_t k = 2; k <= m; ++k) {
    acc = s.product(acc, x);
    if (std::find(powers.begin(), powers.end(), acc) != powers.end()) return false;
    if (s.product(acc, acc) == acc) return false;
    powers.push_back(acc);
  }
  return true;
}

bool recheck_escalating_orders(const LazySemigroup& s, const Json& witness) {
  if (!witness.contains("orders")) return false;
  std::int64_t prev = 1;
  for (const auto& entry : witness.at("orders")) {
    const LazyElem x = s.at(entry.at("index").get<std::size_t>());
    const std::int64_t claimed = entry.at("exponent").get<std::int64_t>();
    if (claimed <= prev) return false;
    LazyElem acc = x;
    for (std::int64_t k = 1; k < claimed; ++k) {
      if (s.product(acc, acc) == acc) return false;  // idempotent power too early
      acc = s.product(acc, x);
    }
    if (s.product(acc, acc) != acc) return false;  // claimed exponent not idempotent
    prev = claimed;
  }
  return prev > 1;
}

bool recheck_distinct(const LazySemigroup& s, const Json& witness) {
  const auto idx = witness_indices(witness);
  std::vector<LazyElem> elems;
  for (auto i : idx) elems.push_back(s.at(i));
  for (std::size_t a = 0; a < elems.size(); ++a) {
    for (std::size_t b = a + 1; b < elems.size(); ++b) {
      if (elems[a] == elems[b]) return false;
    }
  }
  return !elems.empty();
}

bool recheck_non_clifford(const LazySemigroup& s, const Verdict& v) {
  const auto idx = witness_indices(v.witness);
  if (idx.empty()) return false;
  if (v.certificate == "no-idempotents") {
    for (auto i : idx) {
      const LazyElem x = s.at(i);
      if (s.product(x, x) == x) return false;
    }
    return true;
  }
  if (v.certificate == "null-over-zero") {
    const LazyElem zero = s.at(0);
    if (s.product(zero, zero) != zero) return false;
    for (auto i : idx) {
      const LazyElem x = s.at(i);
      if (x == zero || s.product(x, x) != zero) return false;
    }
    return true;
  }
  return false;
}

}  // namespace

bool recheck_witness(const LazySemigroup& s, const Verdict& v) {
  if (!v.witness.is_object()) return true;  // certificate-only verdicts
  if (v.witness.contains("carrier_order")) {
    return s.carrier_size() &&
           v.witness.at("carrier_order").get<std::size_t>() == *s.carrier_size();
  }
  if (v.predicate == "chain_finite") return recheck_absorbed(s, v.witness);
  if (v.predicate == "singular" || v.predicate == "nonsingular") {
    if (v.witness.contains("product_elem")) return recheck_singleton_square(s, v.witness);
    return recheck_distinct(s, v.witness);  // group-certificate prefix
  }
  if (v.predicate == "periodic") return recheck_aperiodic_element(s, v.witness);
  if (v.predicate == "bounded" || v.predicate == "group_bounded") {
    if (v.witness.contains("orders")) return recheck_escalating_orders(s, v.witness);
    return true;  // exponent certificates
  }
  if (v.predicate == "group_finite") return recheck_distinct(s, v.witness);
  if (v.predicate == "clifford_plus_finite") return recheck_non_clifford(s, v);
  return true;
}

}  // namespace sgx
