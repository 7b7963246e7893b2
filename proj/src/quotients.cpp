#include "sgx/quotients.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sgx {

bool is_ideal(const FiniteSemigroup& s, const ElementSet& i) {
  ElementSet::checked(s, i.members);
  for (int a : i.members) {
    for (int x = 0; x < s.order(); ++x) {
      if (!i.contains(s.at(a, x)) || !i.contains(s.at(x, a))) return false;
    }
  }
  return true;
}

namespace {

std::uint64_t as_mask(const ElementSet& set) {
  std::uint64_t m = 0;
  for (int x : set.members) m |= std::uint64_t{1} << x;
  return m;
}

ElementSet from_mask(std::uint64_t m, int order) {
  ElementSet r;
  for (int x = 0; x < order; ++x) {
    if (m & (std::uint64_t{1} << x)) r.members.push_back(x);
  }
  return r;
}

// Principal ideal of x: {x} u xS u Sx u SxS.
std::uint64_t principal_ideal_mask(const FiniteSemigroup& s, int x) {
  std::uint64_t m = std::uint64_t{1} << x;
  for (int y = 0; y < s.order(); ++y) {
    m |= std::uint64_t{1} << s.at(x, y);
    m |= std::uint64_t{1} << s.at(y, x);
    for (int z = 0; z < s.order(); ++z) m |= std::uint64_t{1} << s.at(y, s.at(x, z));
  }
  return m;
}

}  // namespace

std::vector<ElementSet> enumerate_ideals(const FiniteSemigroup& s, int bound) {
  const int n = s.order();
  if (n > bound) {
    throw Error("CarrierTooLarge",
                "ideal enumeration is bounded at order " + std::to_string(bound),
                Json{{"order", n}, {"bound", bound}});
  }
  std::set<std::uint64_t> masks;
  if (n <= 6) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      if (is_ideal(s, from_mask(m, n))) masks.insert(m);
    }
  } else {
    // Every ideal is a union of principal ideals; close the empty set under
    // adding one principal ideal at a time.
    std::vector<std::uint64_t> principal;
    principal.reserve(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) principal.push_back(principal_ideal_mask(s, x));
    std::vector<std::uint64_t> queue{0};
    masks.insert(0);
    while (!queue.empty()) {
      const std::uint64_t m = queue.back();
      queue.pop_back();
      for (std::uint64_t p : principal) {
        const std::uint64_t u = m | p;
        if (masks.insert(u).second) queue.push_back(u);
      }
    }
  }
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(from_mask(m, n));
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

QuotientResult rees_quotient(const FiniteSemigroup& s, const ElementSet& ideal) {
  if (!is_ideal(s, ideal)) {
    throw Error("NotAnIdeal", "the given set is not an ideal",
                Json{{"set", ideal.members}});
  }
  const int n = s.order();
  if (ideal.empty()) {
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    return QuotientResult{s, std::move(id)};
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<std::string> names;
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (!ideal.contains(x)) {
      map[static_cast<std::size_t>(x)] = next++;
      names.push_back(s.name_of(x));
    }
  }
  const int sink = next;
  names.push_back("∅→I");  // the collapsed-ideal sink
  for (int x = 0; x < n; ++x) {
    if (map[static_cast<std::size_t>(x)] < 0) map[static_cast<std::size_t>(x)] = sink;
  }
  const int m = sink + 1;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m), sink));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int mx = map[static_cast<std::size_t>(x)];
      const int my = map[static_cast<std::size_t>(y)];
      if (mx != sink && my != sink) {
        table[static_cast<std::size_t>(mx)][static_cast<std::size_t>(my)] =
            map[static_cast<std::size_t>(s.at(x, y))];
      }
    }
  }
  return QuotientResult{FiniteSemigroup::validate(std::move(names), table), std::move(map)};
}

Congruence rees_congruence(const FiniteSemigroup& s, const ElementSet& ideal) {
  if (!is_ideal(s, ideal)) {
    throw Error("NotAnIdeal", "the given set is not an ideal", Json{{"set", ideal.members}});
  }
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t k = 1; k < ideal.members.size(); ++k) {
    pairs.emplace_back(ideal.members[0], ideal.members[k]);
  }
  return congruence_closure(s, pairs);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent[static_cast<std::size_t>(y)] = x;
    return true;
  }
};

Congruence normalize(const FiniteSemigroup& s, UnionFind& uf) {
  Congruence c;
  c.class_of.assign(static_cast<std::size_t>(s.order()), -1);
  std::vector<int> label(static_cast<std::size_t>(s.order()), -1);
  for (int x = 0; x < s.order(); ++x) {
    const int r = uf.find(x);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = c.num_classes++;
    c.class_of[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(r)];
  }
  return c;
}

}  // namespace

Congruence congruence_closure(const FiniteSemigroup& s,
                              const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(s.order());
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= s.order() || y < 0 || y >= s.order()) {
      throw Error("IndexOutOfRange", "pair element not in carrier", Json{{"pair", {x, y}}});
    }
    if (uf.merge(x, y)) work.emplace_back(x, y);
  }
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (int a = 0; a < s.order(); ++a) {
      if (uf.merge(s.at(a, x), s.at(a, y))) work.emplace_back(s.at(a, x), s.at(a, y));
      if (uf.merge(s.at(x, a), s.at(y, a))) work.emplace_back(s.at(x, a), s.at(y, a));
    }
  }
  return normalize(s, uf);
}

QuotientResult quotient(const FiniteSemigroup& s, const Congruence& c) {
  const int n = s.order();
  if (static_cast<int>(c.class_of.size()) != n || c.num_classes <= 0) {
    throw Error("IncompatiblePartition", "congruence does not match the carrier",
                Json{{"size", c.class_of.size()}, {"order", n}});
  }
  for (int x : c.class_of) {
    if (x < 0 || x >= c.num_classes) {
      throw Error("IncompatiblePartition", "class index out of range", Json{{"class", x}});
    }
  }
  const int m = c.num_classes;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m),
                                      std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const int cx = c.class_of[static_cast<std::size_t>(x)];
      const int cy = c.class_of[static_cast<std::size_t>(y)];
      const int cp = c.class_of[static_cast<std::size_t>(s.at(x, y))];
      int& cell = table[static_cast<std::size_t>(cx)][static_cast<std::size_t>(cy)];
      if (cell < 0) {
        cell = cp;
      } else if (cell != cp) {
        throw Error("IncompatiblePartition",
                    "classes are not compatible with the product",
                    Json{{"x", x}, {"y", y}});
      }
    }
  }
  for (const auto& row : table) {
    for (int cell : row) {
      if (cell < 0) {
        throw Error("IncompatiblePartition", "some class is empty");
      }
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int x = 0; x < n; ++x) {
    auto& label = names[static_cast<std::size_t>(c.class_of[static_cast<std::size_t>(x)])];
    if (!label.empty()) label += "|";
    label += s.name_of(x);
  }
  return QuotientResult{FiniteSemigroup::validate(std::move(names), table),
                        c.class_of};
}

std::vector<Congruence> enumerate_congruences(const FiniteSemigroup& s, int bound) {
  const int n = s.order();
  if (n > bound) {
    throw Error("CarrierTooLarge",
                "congruence enumeration is bounded at order " + std::to_string(bound),
                Json{{"order", n}, {"bound", bound}});
  }
  // Every congruence is the join of the principal congruences it contains,
  // so closing the principal ones under pairwise joins walks the whole
  // congruence lattice without touching all set partitions.
  std::vector<Congruence> principal;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      principal.push_back(congruence_closure(s, {{x, y}}));
    }
  }
  std::set<std::vector<int>> seen;
  std::vector<Congruence> out;
  std::vector<Congruence> queue;
  Congruence identity;
  identity.class_of.resize(static_cast<std::size_t>(n));
  std::iota(identity.class_of.begin(), identity.class_of.end(), 0);
  identity.num_classes = n;
  seen.insert(identity.class_of);
  out.push_back(identity);
  queue.push_back(identity);
  while (!queue.empty()) {
    const Congruence cur = queue.back();
    queue.pop_back();
    for (const Congruence& p : principal) {
      // Join: close the union of the two relations.
      std::vector<std::pair<int, int>> pairs;
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (cur.related(x, y) || p.related(x, y)) pairs.emplace_back(x, y);
        }
      }
      Congruence join = congruence_closure(s, pairs);
      if (seen.insert(join.class_of).second) {
        out.push_back(join);
        queue.push_back(join);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Congruence& a, const Congruence& b) {
    if (a.num_classes != b.num_classes) return a.num_classes > b.num_classes;
    return a.class_of < b.class_of;
  });
  return out;
}

}  // namespace sgx
