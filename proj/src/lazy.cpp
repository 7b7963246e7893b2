#include "sgx/lazy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sgx/structure.hpp"

namespace sgx {

Json LazyFacts::to_json() const {
  Json names = Json::array();
  if (group) names.push_back("group");
  if (commutative) names.push_back("commutative");
  if (torsion) names.push_back("torsion");
  if (no_idempotents) names.push_back("no-idempotents");
  if (pairwise_absorptive) names.push_back("pairwise-absorptive");
  if (null_over_zero) names.push_back("null-over-zero");
  if (exponent) names.push_back("exponent(" + std::to_string(*exponent) + ")");
  return names;
}

LazySemigroup::LazySemigroup(std::string name, std::function<LazyElem(std::size_t)> enumerate,
                             std::function<LazyElem(const LazyElem&, const LazyElem&)> product,
                             std::function<std::string(const LazyElem&)> show, LazyFacts facts,
                             std::optional<std::size_t> carrier_size, Config config)
    : name_(std::move(name)),
      enumerate_(std::move(enumerate)),
      product_(std::move(product)),
      show_(std::move(show)),
      facts_(facts),
      carrier_size_(carrier_size) {
  verify_facts(config);
}

LazyElem LazySemigroup::at(std::size_t i) const {
  if (carrier_size_ && i >= *carrier_size_) {
    throw Error("IndexOutOfRange", "enumeration index beyond finite carrier",
                Json{{"index", i}, {"carrier_size", *carrier_size_}});
  }
  return enumerate_(i);
}

void LazySemigroup::verify_facts(const Config& config) const {
  const std::size_t m = carrier_size_ ? std::min(*carrier_size_, config.fact_depth)
                                      : config.fact_depth;
  std::vector<LazyElem> prefix;
  prefix.reserve(m);
  for (std::size_t i = 0; i < m; ++i) prefix.push_back(enumerate_(i));

  auto fail = [&](const std::string& what) {
    throw Error("FactVerificationFailed", name_ + ": " + what);
  };

  // Enumeration must be injective on the prefix.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (prefix[i] == prefix[j]) fail("enumeration repeats an element");
    }
  }
  // Associativity spot check.
  const std::size_t d = std::min(m, config.assoc_depth);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (product_(product_(prefix[i], prefix[j]), prefix[k]) !=
            product_(prefix[i], product_(prefix[j], prefix[k]))) {
          fail("product is not associative on the checked prefix");
        }
      }
    }
  }
  if (facts_.commutative) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (product_(prefix[i], prefix[j]) != product_(prefix[j], prefix[i])) {
          fail("declared commutative but elements do not commute");
        }
      }
    }
  }
  if (facts_.group) {
    const LazyElem* e = nullptr;
    for (const LazyElem& cand : prefix) {
      bool neutral = true;
      for (const LazyElem& x : prefix) {
        if (product_(cand, x) != x || product_(x, cand) != x) {
          neutral = false;
          break;
        }
      }
      if (neutral) {
        e = &cand;
        break;
      }
    }
    if (e == nullptr) fail("declared group but the prefix has no identity");
    for (const LazyElem& x : prefix) {
      bool has_inverse = false;
      for (const LazyElem& y : prefix) {
        if (product_(x, y) == *e && product_(y, x) == *e) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) fail("declared group but an element has no inverse in the prefix");
    }
  }
  if (facts_.torsion || facts_.group) {
    // Torsion spot check: every prefix element reaches an idempotent power.
    const std::int64_t cap = 1 << 10;
    for (const LazyElem& x : prefix) {
      LazyElem acc = x;
      bool found = false;
      for (std::int64_t k = 1; k <= cap && !found; ++k) {
        found = product_(acc, acc) == acc;
        if (!found) acc = product_(acc, x);
      }
      if (facts_.torsion && !found) fail("declared torsion but no idempotent power found");
    }
  }
  if (facts_.exponent) {
    if (*facts_.exponent < 1) fail("exponent fact must be >= 1");
    for (const LazyElem& x : prefix) {
      LazyElem acc = x;
      for (std::int64_t k = 1; k < *facts_.exponent; ++k) acc = product_(acc, x);
      if (product_(acc, acc) != acc) fail("declared exponent is not idempotent-making");
    }
  }
  if (facts_.no_idempotents) {
    for (const LazyElem& x : prefix) {
      if (product_(x, x) == x) fail("declared no-idempotents but found one");
    }
  }
  if (facts_.pairwise_absorptive) {
    for (const LazyElem& x : prefix) {
      for (const LazyElem& y : prefix) {
        const LazyElem p = product_(x, y);
        if (p != x && p != y) fail("declared pairwise-absorptive but a product escapes");
      }
    }
  }
  if (facts_.null_over_zero) {
    const LazyElem& z = prefix.at(0);
    if (product_(z, z) != z) fail("declared null-over-zero but enumerate(0) is not idempotent");
    for (const LazyElem& x : prefix) {
      for (const LazyElem& y : prefix) {
        if (product_(x, y) != z) fail("declared null-over-zero but a product misses the zero");
      }
    }
  }
}

// -- families ----------------------------------------------------------------

LazySemigroup naturals_plus() {
  LazyFacts facts;
  facts.commutative = true;
  facts.no_idempotents = true;
  return LazySemigroup(
      "naturals_plus",
      [](std::size_t i) { return LazyElem{static_cast<std::int64_t>(i) + 1}; },
      [](const LazyElem& a, const LazyElem& b) { return LazyElem{a[0] + b[0]}; },
      [](const LazyElem& e) { return std::to_string(e[0]); }, facts);
}

LazySemigroup omega_min() {
  LazyFacts facts;
  facts.commutative = true;
  facts.pairwise_absorptive = true;
  facts.exponent = 1;
  return LazySemigroup(
      "omega_min", [](std::size_t i) { return LazyElem{static_cast<std::int64_t>(i)}; },
      [](const LazyElem& a, const LazyElem& b) { return LazyElem{std::min(a[0], b[0])}; },
      [](const LazyElem& e) { return std::to_string(e[0]); }, facts);
}

LazySemigroup infinite_null() {
  LazyFacts facts;
  facts.commutative = true;
  facts.null_over_zero = true;
  facts.exponent = 2;
  return LazySemigroup(
      "infinite_null", [](std::size_t i) { return LazyElem{static_cast<std::int64_t>(i)}; },
      [](const LazyElem&, const LazyElem&) { return LazyElem{0}; },
      [](const LazyElem& e) { return e[0] == 0 ? std::string("0") : "a" + std::to_string(e[0]); },
      facts);
}

LazySemigroup quasicyclic(std::int64_t p) {
  if (p < 2) throw Error("NotPrime", std::to_string(p) + " is not prime", Json{{"p", p}});
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error("NotPrime", std::to_string(p) + " is not prime", Json{{"p", p}});
  }
  LazyFacts facts;
  facts.group = true;
  facts.commutative = true;
  facts.torsion = true;
  auto enumerate = [p](std::size_t i) {
    if (i == 0) return LazyElem{0, 1};  // 0/1
    // Level n >= 1 holds the phi(p^n) = p^n - p^(n-1) reduced fractions k/p^n.
    std::int64_t den = 1;
    std::int64_t level_size = 1;
    std::int64_t idx = static_cast<std::int64_t>(i) - 1;
    den = p;
    level_size = p - 1;
    while (idx >= level_size) {
      idx -= level_size;
      den *= p;
      level_size *= p;
    }
    // idx-th positive numerator coprime to p: skip multiples of p.
    const std::int64_t num = (idx / (p - 1)) * p + (idx % (p - 1)) + 1;
    return LazyElem{num, den};
  };
  auto product = [](const LazyElem& a, const LazyElem& b) {
    const std::int64_t d = std::max(a[1], b[1]);
    std::int64_t num = (a[0] * (d / a[1]) + b[0] * (d / b[1])) % d;
    std::int64_t den = d;
    if (num == 0) return LazyElem{0, 1};
    const std::int64_t g = std::gcd(num, den);
    return LazyElem{num / g, den / g};
  };
  auto show = [](const LazyElem& e) {
    return std::to_string(e[0]) + "/" + std::to_string(e[1]);
  };
  return LazySemigroup("quasicyclic:" + std::to_string(p), enumerate, product, show, facts);
}

LazySemigroup bounded_boolean() {
  LazyFacts facts;
  facts.group = true;
  facts.commutative = true;
  facts.exponent = 2;
  auto enumerate = [](std::size_t i) {
    LazyElem support;
    for (std::int64_t bit = 0; i != 0; ++bit, i >>= 1) {
      if (i & 1u) support.push_back(bit);
    }
    return support;
  };
  auto product = [](const LazyElem& a, const LazyElem& b) {
    LazyElem out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
  };
  auto show = [](const LazyElem& e) {
    if (e.empty()) return std::string("{}");
    std::string out = "{";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(e[k]);
    }
    return out + "}";
  };
  return LazySemigroup("bounded_boolean", enumerate, product, show, facts);
}

LazySemigroup finite_wrap(const FiniteSemigroup& s) {
  LazyFacts facts;
  facts.commutative = s.is_commutative();
  facts.torsion = true;  // finite carriers are always periodic
  // Least uniform exponent: smallest multiple of lcm(periods) >= max index.
  {
    std::int64_t lcm_periods = 1;
    std::int64_t max_index = 1;
    for (int x = 0; x < s.order(); ++x) {
      const auto t = power_trace(s, x);
      lcm_periods = std::lcm(lcm_periods, static_cast<std::int64_t>(t.period));
      max_index = std::max(max_index, static_cast<std::int64_t>(t.index));
    }
    std::int64_t n = lcm_periods;
    while (n < max_index) n += lcm_periods;
    facts.exponent = n;
  }
  const auto idems = idempotents(s);
  facts.group = idems.size() == 1 &&
                h_class(s, idems.members.front()).size() == static_cast<std::size_t>(s.order());
  facts.pairwise_absorptive = true;
  for (int x = 0; x < s.order() && facts.pairwise_absorptive; ++x) {
    for (int y = 0; y < s.order() && facts.pairwise_absorptive; ++y) {
      const int p = s.at(x, y);
      facts.pairwise_absorptive = p == x || p == y;
    }
  }
  facts.null_over_zero = true;
  for (int x = 0; x < s.order() && facts.null_over_zero; ++x) {
    for (int y = 0; y < s.order() && facts.null_over_zero; ++y) {
      facts.null_over_zero = s.at(x, y) == 0;
    }
  }
  std::vector<std::string> names = s.names();
  const FiniteSemigroup table = s;  // value copy shared by the closures
  return LazySemigroup(
      "finite:" + std::to_string(s.order()),
      [](std::size_t i) { return LazyElem{static_cast<std::int64_t>(i)}; },
      [table](const LazyElem& a, const LazyElem& b) {
        return LazyElem{static_cast<std::int64_t>(
            table.at(static_cast<int>(a[0]), static_cast<int>(b[0])))};
      },
      [names](const LazyElem& e) { return names.at(static_cast<std::size_t>(e[0])); }, facts,
      static_cast<std::size_t>(s.order()));
}

LazySemigroup family_from_spec(const std::string& spec) {
  std::string name = spec;
  std::string param;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    param = spec.substr(colon + 1);
  }
  if (name == "naturals_plus") return naturals_plus();
  if (name == "omega_min") return omega_min();
  if (name == "infinite_null") return infinite_null();
  if (name == "bounded_boolean") return bounded_boolean();
  if (name == "quasicyclic") {
    if (param.empty()) {
      throw Error("UnknownFamily", "quasicyclic needs a prime parameter, e.g. quasicyclic:2");
    }
    return quasicyclic(std::stoll(param));
  }
  throw Error("UnknownFamily", "no lazy family named " + name,
              Json{{"known",
                    {"naturals_plus", "omega_min", "infinite_null", "quasicyclic:<p>",
                     "bounded_boolean"}}});
}

}  // namespace sgx
