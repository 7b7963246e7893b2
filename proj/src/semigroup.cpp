#include "sgx/semigroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace sgx {

FiniteSemigroup FiniteSemigroup::validate(std::vector<std::string> names,
                                          const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(names.size());
  if (n <= 0) {
    throw Error("NonSquare", "a semigroup needs at least one element");
  }
  if (static_cast<int>(table.size()) != n) {
    throw Error("NonSquare", "table has " + std::to_string(table.size()) + " rows, expected " +
                                 std::to_string(n),
                Json{{"rows", table.size()}, {"expected", n}});
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n) {
      throw Error("NonSquare", "row " + std::to_string(i) + " has wrong length",
                  Json{{"row", i}, {"length", table[static_cast<std::size_t>(i)].size()},
                       {"expected", n}});
    }
    for (int j = 0; j < n; ++j) {
      const int v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0 || v >= n) {
        throw Error("IndexOutOfRange",
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                        std::to_string(v) + " is not an element index",
                    Json{{"i", i}, {"j", j}, {"value", v}});
      }
      flat.push_back(v);
    }
  }
  auto prod = [&](int i, int j) {
    return flat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (prod(prod(i, j), k) != prod(i, prod(j, k))) {
          throw Error("NotAssociative",
                      "(x" + std::to_string(i) + " x" + std::to_string(j) + ") x" +
                          std::to_string(k) + " != x" + std::to_string(i) + " (x" +
                          std::to_string(j) + " x" + std::to_string(k) + ")",
                      Json{{"triple", {i, j, k}}});
        }
      }
    }
  }
  return FiniteSemigroup(std::move(names), std::move(flat), n);
}

std::vector<std::vector<int>> FiniteSemigroup::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int i = 0; i < order_; ++i) {
    out[static_cast<std::size_t>(i)].assign(
        table_.begin() + static_cast<std::ptrdiff_t>(i) * order_,
        table_.begin() + static_cast<std::ptrdiff_t>(i + 1) * order_);
  }
  return out;
}

std::optional<int> FiniteSemigroup::index_of(const std::string& name) const {
  for (int i = 0; i < order_; ++i) {
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  }
  return std::nullopt;
}

bool FiniteSemigroup::is_commutative() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

std::optional<int> FiniteSemigroup::identity() const {
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x) {
      ok = at(e, x) == x && at(x, e) == x;
    }
    if (ok) return e;
  }
  return std::nullopt;
}

// -- ElementSet --------------------------------------------------------------

ElementSet::ElementSet(std::vector<int> xs) : members(std::move(xs)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

ElementSet ElementSet::checked(const FiniteSemigroup& s, std::vector<int> xs) {
  ElementSet set(std::move(xs));
  for (int x : set.members) {
    if (x < 0 || x >= s.order()) {
      throw Error("IndexOutOfRange", "element index " + std::to_string(x) + " not in carrier",
                  Json{{"index", x}, {"order", s.order()}});
    }
  }
  return set;
}

bool ElementSet::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

ElementSet ElementSet::set_union(const ElementSet& other) const {
  std::vector<int> out;
  std::set_union(members.begin(), members.end(), other.members.begin(), other.members.end(),
                 std::back_inserter(out));
  ElementSet r;
  r.members = std::move(out);
  return r;
}

ElementSet ElementSet::set_intersection(const ElementSet& other) const {
  std::vector<int> out;
  std::set_intersection(members.begin(), members.end(), other.members.begin(),
                        other.members.end(), std::back_inserter(out));
  ElementSet r;
  r.members = std::move(out);
  return r;
}

ElementSet ElementSet::set_difference(const ElementSet& other) const {
  std::vector<int> out;
  std::set_difference(members.begin(), members.end(), other.members.begin(), other.members.end(),
                      std::back_inserter(out));
  ElementSet r;
  r.members = std::move(out);
  return r;
}

ElementSet ElementSet::complement(int order) const {
  ElementSet r;
  for (int x = 0; x < order; ++x) {
    if (!contains(x)) r.members.push_back(x);
  }
  return r;
}

ElementSet ElementSet::full(int order) {
  ElementSet r;
  r.members.resize(static_cast<std::size_t>(order));
  std::iota(r.members.begin(), r.members.end(), 0);
  return r;
}

std::vector<std::string> ElementSet::names_in(const FiniteSemigroup& s) const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (int x : members) out.push_back(s.name_of(x));
  return out;
}

// -- powers ------------------------------------------------------------------

int power(const FiniteSemigroup& s, int x, std::int64_t n) {
  if (n < 1) throw Error("IndexOutOfRange", "power exponent must be >= 1", Json{{"n", n}});
  int acc = x;
  for (std::int64_t k = 1; k < n; ++k) acc = s.at(acc, x);
  return acc;
}

PowerTrace power_trace(const FiniteSemigroup& s, int x) {
  PowerTrace t;
  std::vector<int> seen_at(static_cast<std::size_t>(s.order()), -1);
  int cur = x;
  int pos = 0;  // exponent - 1
  while (seen_at[static_cast<std::size_t>(cur)] < 0) {
    seen_at[static_cast<std::size_t>(cur)] = pos;
    t.powers.push_back(cur);
    cur = s.at(cur, x);
    ++pos;
  }
  t.index = seen_at[static_cast<std::size_t>(cur)] + 1;
  t.period = pos - seen_at[static_cast<std::size_t>(cur)];
  // x^n is idempotent iff n >= index and period | n.
  std::int64_t n = t.period;
  while (n < t.index) n += t.period;
  t.least_idempotent_exponent = n;
  return t;
}

// -- constructions -----------------------------------------------------------

FiniteSemigroup zero_extension(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<std::string> names = s.names();
  names.push_back("0");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.at(i, j);
  }
  return FiniteSemigroup::validate(std::move(names), table);
}

FiniteSemigroup one_extension(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<std::string> names = s.names();
  names.push_back("1");
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s.at(i, j);
    table[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = i;
    table[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] = i;
  }
  table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] = n;
  return FiniteSemigroup::validate(std::move(names), table);
}

ElementSet generated_subsemigroup(const FiniteSemigroup& s, const ElementSet& seeds) {
  if (seeds.empty()) throw Error("EmptySeed", "generated_subsemigroup needs a nonempty seed set");
  ElementSet::checked(s, seeds.members);
  std::vector<bool> in(static_cast<std::size_t>(s.order()), false);
  std::vector<int> queue;
  for (int x : seeds.members) {
    in[static_cast<std::size_t>(x)] = true;
    queue.push_back(x);
  }
  std::vector<int> all = queue;
  while (!queue.empty()) {
    const int x = queue.back();
    queue.pop_back();
    for (std::size_t k = 0; k < all.size(); ++k) {
      const int y = all[k];
      for (int p : {s.at(x, y), s.at(y, x)}) {
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = true;
          all.push_back(p);
          queue.push_back(p);
        }
      }
    }
  }
  return ElementSet(std::move(all));
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& s, const ElementSet& closed_subset) {
  ElementSet::checked(s, closed_subset.members);
  const auto& m = closed_subset.members;
  std::vector<int> pos(static_cast<std::size_t>(s.order()), -1);
  for (std::size_t k = 0; k < m.size(); ++k) pos[static_cast<std::size_t>(m[k])] = static_cast<int>(k);
  std::vector<std::string> names;
  names.reserve(m.size());
  for (int x : m) names.push_back(s.name_of(x));
  std::vector<std::vector<int>> table(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const int p = s.at(m[i], m[j]);
      if (pos[static_cast<std::size_t>(p)] < 0) {
        throw Error("IndexOutOfRange", "subset is not product-closed",
                    Json{{"x", m[i]}, {"y", m[j]}, {"product", p}});
      }
      table[i][j] = pos[static_cast<std::size_t>(p)];
    }
  }
  return FiniteSemigroup::validate(std::move(names), table);
}

bool is_homomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                     const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != s.order()) {
    throw Error("IndexOutOfRange", "map is not total on the carrier",
                Json{{"map_size", map.size()}, {"order", s.order()}});
  }
  for (int v : map) {
    if (v < 0 || v >= t.order()) {
      throw Error("IndexOutOfRange", "map value outside target carrier", Json{{"value", v}});
    }
  }
  for (int i = 0; i < s.order(); ++i) {
    for (int j = 0; j < s.order(); ++j) {
      if (map[static_cast<std::size_t>(s.at(i, j))] !=
          t.at(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

// -- isomorphism search ------------------------------------------------------

namespace {

// Iteratively refined invariant colors. Initial color: (idempotent?, power
// index, power period); refinement folds in the multisets of colors seen in
// the element's row and column. Stable under isomorphism by construction.
std::vector<int> fingerprint_colors(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  {
    std::map<std::tuple<bool, int, int>, int> palette;
    for (int x = 0; x < n; ++x) {
      const auto t = power_trace(s, x);
      const auto key = std::make_tuple(s.at(x, x) == x, t.index, t.period);
      auto [it, _] = palette.emplace(key, static_cast<int>(palette.size()));
      color[static_cast<std::size_t>(x)] = it->second;
    }
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> palette;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      std::vector<int> key;
      key.push_back(color[static_cast<std::size_t>(x)]);
      std::vector<int> row, col;
      for (int y = 0; y < n; ++y) {
        row.push_back(color[static_cast<std::size_t>(s.at(x, y))]);
        col.push_back(color[static_cast<std::size_t>(s.at(y, x))]);
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      key.insert(key.end(), row.begin(), row.end());
      key.insert(key.end(), col.begin(), col.end());
      auto [it, _] = palette.emplace(std::move(key), static_cast<int>(palette.size()));
      next[static_cast<std::size_t>(x)] = it->second;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Elements are mapped in index order, so after step k exactly {0..k} are
// mapped. A product constraint for the pair (x,y) is enforced at step
// max(x, y, s.at(x,y)); every pair is therefore checked before completion.
bool extend_isomorphism(const FiniteSemigroup& s, const FiniteSemigroup& t,
                        const std::vector<int>& cs, const std::vector<int>& ct,
                        std::vector<int>& map, std::vector<bool>& used, int next) {
  const int n = s.order();
  if (next == n) return true;
  for (int img = 0; img < n; ++img) {
    if (used[static_cast<std::size_t>(img)]) continue;
    if (ct[static_cast<std::size_t>(img)] != cs[static_cast<std::size_t>(next)]) continue;
    map[static_cast<std::size_t>(next)] = img;
    bool ok = true;
    for (int y = 0; y <= next && ok; ++y) {
      const int my = map[static_cast<std::size_t>(y)];
      const int p1 = s.at(next, y), p2 = s.at(y, next);
      if (p1 <= next && map[static_cast<std::size_t>(p1)] != t.at(img, my)) ok = false;
      if (ok && p2 <= next && map[static_cast<std::size_t>(p2)] != t.at(my, img)) ok = false;
    }
    for (int x = 0; x < next && ok; ++x) {
      for (int y = 0; y < next && ok; ++y) {
        if (s.at(x, y) == next &&
            t.at(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]) != img) {
          ok = false;
        }
      }
    }
    if (ok) {
      used[static_cast<std::size_t>(img)] = true;
      if (extend_isomorphism(s, t, cs, ct, map, used, next + 1)) return true;
      used[static_cast<std::size_t>(img)] = false;
    }
    map[static_cast<std::size_t>(next)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteSemigroup& s,
                                                 const FiniteSemigroup& t) {
  if (s.order() != t.order()) return std::nullopt;
  const auto cs = fingerprint_colors(s);
  const auto ct = fingerprint_colors(t);
  auto hist = [](const std::vector<int>& c) {
    std::vector<int> h = c;
    std::sort(h.begin(), h.end());
    return h;
  };
  if (hist(cs) != hist(ct)) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(s.order()), -1);
  std::vector<bool> used(static_cast<std::size_t>(s.order()), false);
  if (!extend_isomorphism(s, t, cs, ct, map, used, 0)) return std::nullopt;
  return map;
}

}  // namespace sgx
