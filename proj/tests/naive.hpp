#pragma once
// Deliberately simple reference implementations used to cross-check the
// library. Everything here favours directness over speed: std::set closures,
// quadratic sweeps, and subset searches. Nothing in this header calls the
// optimized code paths it is used to verify.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "nonf/group.hpp"

namespace naive {

using nonf::element_t;
using nonf::FiniteGroup;

using Set = std::set<element_t>;

inline Set closure(const FiniteGroup& g, Set gens) {
  Set out{nonf::kIdentity};
  for (element_t x : gens) out.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    Set next = out;
    for (element_t a : out)
      for (element_t b : out)
        if (next.insert(g.mul(a, b)).second) grew = true;
    out.swap(next);
  }
  return out;
}

inline Set closure(const FiniteGroup& g, std::initializer_list<element_t> gens) {
  return closure(g, Set(gens));
}

inline std::vector<element_t> to_vec(const Set& s) {
  return std::vector<element_t>(s.begin(), s.end());
}

inline Set center(const FiniteGroup& g) {
  Set out;
  for (element_t z = 0; z < g.order(); ++z) {
    bool central = true;
    for (element_t x = 0; x < g.order() && central; ++x)
      central = g.mul(z, x) == g.mul(x, z);
    if (central) out.insert(z);
  }
  return out;
}

// Conjugacy classes as a sorted vector of sorted classes.
inline std::vector<std::vector<element_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<element_t>> out;
  for (element_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    Set cls;
    for (element_t t = 0; t < g.order(); ++t)
      cls.insert(g.mul(g.inv(t), g.mul(x, t)));
    for (element_t y : cls) seen[y] = 1;
    out.push_back(to_vec(cls));
  }
  return out;
}

// Every subgroup, by breadth-first extension: grow each known subgroup by
// one outside element and close. Complete because any subgroup is reachable
// from the trivial one by adding its members one at a time.
inline std::vector<Set> all_subgroups(const FiniteGroup& g) {
  std::set<Set> known;
  known.insert(Set{nonf::kIdentity});
  std::vector<Set> queue(known.begin(), known.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Set base = queue[head];
    for (element_t x = 0; x < g.order(); ++x) {
      if (base.count(x)) continue;
      Set ext = base;
      ext.insert(x);
      Set cl = closure(g, ext);
      if (known.insert(cl).second) queue.push_back(cl);
    }
  }
  return std::vector<Set>(queue.begin(), queue.end());
}

inline bool is_normal(const FiniteGroup& g, const Set& h) {
  for (element_t t = 0; t < g.order(); ++t)
    for (element_t x : h)
      if (!h.count(g.mul(g.inv(t), g.mul(x, t)))) return false;
  return true;
}

inline std::vector<Set> normal_subgroups(const FiniteGroup& g) {
  std::vector<Set> out;
  for (const Set& h : all_subgroups(g))
    if (is_normal(g, h)) out.push_back(h);
  std::sort(out.begin(), out.end(), [](const Set& a, const Set& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

inline Set derived_subgroup(const FiniteGroup& g, const Set& h) {
  Set comms;
  for (element_t a : h)
    for (element_t b : h)
      comms.insert(g.mul(g.inv(a), g.mul(g.inv(b), g.mul(a, b))));
  return closure(g, comms);
}

inline bool is_soluble(const FiniteGroup& g) {
  Set h;
  for (element_t x = 0; x < g.order(); ++x) h.insert(x);
  while (true) {
    Set d = derived_subgroup(g, h);
    if (d == h) return h.size() == 1;
    h.swap(d);
  }
}

inline bool is_abelian_set(const FiniteGroup& g, const Set& h) {
  for (element_t a : h)
    for (element_t b : h)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline bool is_cyclic_set(const FiniteGroup& g, const Set& h) {
  for (element_t x : h)
    if (closure(g, {x}) == h) return true;
  return h.size() == 1;
}

inline bool is_nilpotent_set(const FiniteGroup& g, const Set& h) {
  // Lower central series with plain sets.
  Set current = h;
  while (current.size() > 1) {
    Set comms;
    for (element_t a : h)
      for (element_t b : current)
        comms.insert(g.mul(g.inv(a), g.mul(g.inv(b), g.mul(a, b))));
    Set next = closure(g, comms);
    if (next == current) return false;
    current.swap(next);
  }
  return true;
}

inline bool is_soluble_set(const FiniteGroup& g, const Set& h) {
  Set current = h;
  while (current.size() > 1) {
    Set d = derived_subgroup(g, current);
    if (d == current) return false;
    current.swap(d);
  }
  return true;
}

// Smallest generating set by exhaustive subset search (sizes 1..4).
inline std::uint32_t min_generators(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  std::vector<element_t> elems(g.order());
  for (element_t x = 0; x < g.order(); ++x) elems[x] = x;
  for (std::uint32_t k = 1; k <= 4; ++k) {
    std::vector<std::uint32_t> idx(k);
    for (std::uint32_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Set gens;
      for (std::uint32_t i : idx) gens.insert(elems[i]);
      if (closure(g, gens).size() == g.order()) return k;
      // next combination
      std::int64_t i = k - 1;
      while (i >= 0 && idx[i] == g.order() - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (std::uint32_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return 5;  // "more than 4"
}

inline Set sylow_subgroup(const FiniteGroup& g, std::uint32_t p) {
  std::uint64_t target = 1;
  {
    std::uint64_t n = g.order();
    while (n % p == 0) {
      n /= p;
      target *= p;
    }
  }
  for (const Set& h : all_subgroups(g))
    if (h.size() == target) return h;
  return Set{nonf::kIdentity};
}

inline Set frattini(const FiniteGroup& g) {
  std::vector<Set> subs = all_subgroups(g);
  // maximal proper subgroups
  std::vector<const Set*> maximals;
  for (const Set& h : subs) {
    if (h.size() == g.order()) continue;
    bool maximal = true;
    for (const Set& k : subs) {
      if (k.size() == g.order() || k.size() <= h.size() || &k == &h) continue;
      if (std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) maximals.push_back(&h);
  }
  Set out;
  for (element_t x = 0; x < g.order(); ++x) out.insert(x);
  for (const Set* m : maximals) {
    Set inter;
    for (element_t x : out)
      if (m->count(x)) inter.insert(x);
    out.swap(inter);
  }
  return out;
}

// Isolated vertices of the pair graph induced by an arbitrary predicate:
// x is isolated when no y forms an edge with it. Direct quadratic sweep.
inline Set isolated_vertices(const FiniteGroup& g,
                             const std::function<bool(element_t, element_t)>& adjacent) {
  Set out;
  for (element_t x = 0; x < g.order(); ++x) {
    bool iso = true;
    for (element_t y = 0; y < g.order() && iso; ++y)
      if (y != x && adjacent(x, y)) iso = false;
    if (iso) out.insert(x);
  }
  return out;
}

// Connected components of the same predicate graph on the non-isolated
// vertices; returns sorted components, largest first.
inline std::vector<std::vector<element_t>> components(
    const FiniteGroup& g, const std::function<bool(element_t, element_t)>& adjacent) {
  Set iso = isolated_vertices(g, adjacent);
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<element_t>> out;
  for (element_t x = 0; x < g.order(); ++x) {
    if (seen[x] || iso.count(x)) continue;
    std::vector<element_t> comp{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (element_t y = 0; y < g.order(); ++y)
        if (!seen[y] && !iso.count(y) && y != comp[head] && adjacent(comp[head], y)) {
          seen[y] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

}  // namespace naive
