#include "sgx/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sgx {

namespace {

void require_idempotent(const FiniteSemigroup& s, int e) {
  if (e < 0 || e >= s.order()) {
    throw Error("IndexOutOfRange", "element index " + std::to_string(e) + " not in carrier",
                Json{{"index", e}});
  }
  if (s.at(e, e) != e) {
    throw Error("NotIdempotent", s.name_of(e) + " is not an idempotent", Json{{"element", e}});
  }
}

}  // namespace

ElementSet idempotents(const FiniteSemigroup& s) {
  ElementSet r;
  for (int x = 0; x < s.order(); ++x) {
    if (s.at(x, x) == x) r.members.push_back(x);
  }
  return r;
}

bool IdempotentOrder::leq(int x, int y) const {
  return std::binary_search(le.begin(), le.end(), std::make_pair(x, y));
}

ElementSet IdempotentOrder::strictly_below(int e) const {
  ElementSet r;
  for (int x : idems.members) {
    if (x != e && leq(x, e)) r.members.push_back(x);
  }
  return r;
}

IdempotentOrder natural_order(const FiniteSemigroup& s) {
  IdempotentOrder o;
  o.idems = idempotents(s);
  for (int x : o.idems.members) {
    for (int y : o.idems.members) {
      if (s.at(x, y) == x && s.at(y, x) == x) o.le.emplace_back(x, y);
    }
  }
  std::sort(o.le.begin(), o.le.end());
  return o;
}

HClassDecomposition h_classes(const FiniteSemigroup& s) {
  const int n = s.order();
  // Principal ideals in S^1 as bitmask pairs: xS^1 = {x} u row(x),
  // S^1x = {x} u col(x). Same pair <=> same H-class.
  std::vector<std::pair<std::vector<bool>, std::vector<bool>>> key(
      static_cast<std::size_t>(n),
      {std::vector<bool>(static_cast<std::size_t>(n), false),
       std::vector<bool>(static_cast<std::size_t>(n), false)});
  for (int x = 0; x < n; ++x) {
    auto& [right, left] = key[static_cast<std::size_t>(x)];
    right[static_cast<std::size_t>(x)] = true;
    left[static_cast<std::size_t>(x)] = true;
    for (int y = 0; y < n; ++y) {
      right[static_cast<std::size_t>(s.at(x, y))] = true;
      left[static_cast<std::size_t>(s.at(y, x))] = true;
    }
  }
  HClassDecomposition d;
  d.class_of.assign(static_cast<std::size_t>(n), -1);
  std::map<std::pair<std::vector<bool>, std::vector<bool>>, int> seen;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = seen.emplace(key[static_cast<std::size_t>(x)],
                                       static_cast<int>(d.classes.size()));
    if (inserted) d.classes.emplace_back();
    d.class_of[static_cast<std::size_t>(x)] = it->second;
    d.classes[static_cast<std::size_t>(it->second)].members.push_back(x);
  }
  d.group_flags.assign(d.classes.size(), false);
  for (int x = 0; x < n; ++x) {
    if (s.at(x, x) == x) d.group_flags[static_cast<std::size_t>(d.class_of[static_cast<std::size_t>(x)])] = true;
  }
  return d;
}

ElementSet h_class(const FiniteSemigroup& s, int a) {
  if (a < 0 || a >= s.order()) {
    throw Error("IndexOutOfRange", "element index " + std::to_string(a) + " not in carrier",
                Json{{"index", a}});
  }
  const auto d = h_classes(s);
  return d.class_containing(a);
}

int MaximalSubgroup::inverse(int x) const {
  for (std::size_t k = 0; k < members.members.size(); ++k) {
    if (members.members[k] == x) return inverse_of[k];
  }
  throw Error("IndexOutOfRange", "element not in this subgroup", Json{{"element", x}});
}

MaximalSubgroup maximal_subgroup(const FiniteSemigroup& s, int e) {
  require_idempotent(s, e);
  MaximalSubgroup g;
  g.e = e;
  g.members = h_class(s, e);
  // Re-verify the group axioms on H_e instead of trusting the equivalence
  // with the maximal subgroup; this doubles as a standing check of h_class.
  for (int x : g.members.members) {
    if (s.at(e, x) != x || s.at(x, e) != x) {
      throw std::logic_error("H-class of an idempotent is not a group (identity law)");
    }
    for (int y : g.members.members) {
      if (!g.members.contains(s.at(x, y))) {
        throw std::logic_error("H-class of an idempotent is not a group (closure)");
      }
    }
  }
  g.inverse_of.reserve(g.members.members.size());
  for (int x : g.members.members) {
    int inv = -1;
    for (int y : g.members.members) {
      if (s.at(x, y) == e && s.at(y, x) == e) {
        if (inv >= 0) throw std::logic_error("two inverses in a maximal subgroup");
        inv = y;
      }
    }
    if (inv < 0) throw std::logic_error("H-class of an idempotent is not a group (inverses)");
    g.inverse_of.push_back(inv);
  }
  return g;
}

ElementSet clifford_part(const FiniteSemigroup& s) {
  const auto d = h_classes(s);
  ElementSet r;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (d.group_flags[c]) {
      r = r.set_union(d.classes[c]);
    }
  }
  return r;
}

ElementSet center(const FiniteSemigroup& s) {
  ElementSet r;
  for (int z = 0; z < s.order(); ++z) {
    bool central = true;
    for (int x = 0; x < s.order() && central; ++x) central = s.at(z, x) == s.at(x, z);
    if (central) r.members.push_back(z);
  }
  return r;
}

ElementSet ideal_center(const FiniteSemigroup& s) {
  const ElementSet z = center(s);
  ElementSet r;
  for (int c : z.members) {
    bool stays = true;
    for (int x = 0; x < s.order() && stays; ++x) stays = z.contains(s.at(c, x));
    if (stays) r.members.push_back(c);
  }
  // Always-on sanity: IZ is an ideal contained in the center.
  for (int c : r.members) {
    for (int x = 0; x < s.order(); ++x) {
      if (!r.contains(s.at(c, x)) || !r.contains(s.at(x, c))) {
        throw std::logic_error("ideal_center computed a non-ideal");
      }
    }
  }
  return r;
}

ElementSet roots(const FiniteSemigroup& s, const ElementSet& a, std::int64_t n) {
  if (n < 1) throw Error("IndexOutOfRange", "root degree must be >= 1", Json{{"n", n}});
  ElementSet::checked(s, a.members);
  ElementSet r;
  for (int x = 0; x < s.order(); ++x) {
    if (a.contains(power(s, x, n))) r.members.push_back(x);
  }
  return r;
}

ElementSet roots_all(const FiniteSemigroup& s, const ElementSet& a) {
  ElementSet::checked(s, a.members);
  ElementSet r;
  for (int x = 0; x < s.order(); ++x) {
    // The power sequence of x visits exactly power_trace(s, x).powers.
    const auto t = power_trace(s, x);
    for (int p : t.powers) {
      if (a.contains(p)) {
        r.members.push_back(x);
        break;
      }
    }
  }
  return r;
}

ElementSet coideal_of(const FiniteSemigroup& s, int e) {
  require_idempotent(s, e);
  const ElementSet he = h_class(s, e);
  ElementSet r;
  for (int x = 0; x < s.order(); ++x) {
    const int xe = s.at(x, e);
    if (xe == s.at(e, x) && he.contains(xe)) r.members.push_back(x);
  }
  return r;
}

ElementSet viable_idempotents(const FiniteSemigroup& s) {
  ElementSet r;
  for (int e : idempotents(s).members) {
    const ElementSet outside = coideal_of(s, e).complement(s.order());
    bool ideal = true;
    for (int i : outside.members) {
      for (int x = 0; x < s.order() && ideal; ++x) {
        ideal = outside.contains(s.at(i, x)) && outside.contains(s.at(x, i));
      }
      if (!ideal) break;
    }
    if (ideal) r.members.push_back(e);
  }
  return r;
}

bool is_z_viable(const FiniteSemigroup& s) {
  const ElementSet ve = viable_idempotents(s);
  const ElementSet z = center(s);
  for (int e : idempotents(s).members) {
    if (z.contains(e) && !ve.contains(e)) return false;
  }
  return true;
}

ElementSet g_subgroup(const FiniteSemigroup& s, int e, int a) {
  require_idempotent(s, e);
  if (a < 0 || a >= s.order()) {
    throw Error("IndexOutOfRange", "element index " + std::to_string(a) + " not in carrier",
                Json{{"index", a}});
  }
  if (coideal_of(s, e).contains(a)) {
    throw Error("NotOutsideCoideal",
                s.name_of(a) + " lies in the coideal of " + s.name_of(e),
                Json{{"e", e}, {"a", a}});
  }
  const ElementSet he = h_class(s, e);
  const int ae = s.at(a, e);
  ElementSet r;
  for (int x : he.members) {
    if (s.at(a, x) == ae) r.members.push_back(x);
  }
  return r;
}

Json StructureReport::to_json(const FiniteSemigroup& s) const {
  Json order_pairs = Json::array();
  for (const auto& [x, y] : order.le) {
    order_pairs.push_back(Json::array({s.name_of(x), s.name_of(y)}));
  }
  Json classes = Json::array();
  for (std::size_t c = 0; c < h.classes.size(); ++c) {
    classes.push_back(Json{{"members", h.classes[c].names_in(s)},
                           {"is_group", static_cast<bool>(h.group_flags[c])}});
  }
  return Json{{"idempotents", idems.names_in(s)},
              {"natural_order", order_pairs},
              {"h_classes", classes},
              {"center", center_set.names_in(s)},
              {"ideal_center", ideal_center_set.names_in(s)},
              {"viable_idempotents", viable.names_in(s)},
              {"clifford_part", clifford.names_in(s)}};
}

StructureReport compute_structure_report(const FiniteSemigroup& s) {
  StructureReport r;
  r.idems = idempotents(s);
  r.order = natural_order(s);
  r.h = h_classes(s);
  r.center_set = center(s);
  r.ideal_center_set = ideal_center(s);
  r.viable = viable_idempotents(s);
  r.clifford = clifford_part(s);
  return r;
}

}  // namespace sgx
