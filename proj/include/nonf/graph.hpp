#pragma once

// Group-pair graphs and their connectivity.
//
// Two graphs share one engine here, differing only in the adjacency
// predicate on element pairs:
//  - the class graph: x ~ y iff <x,y> lies outside a fixed group class;
//  - the generating graph: x ~ y iff <x,y> is the whole group.
//
// Two construction modes. Explicit mode tests every unordered pair and
// stores the edge list (capped group size). Orbit mode exploits the fact
// that both predicates are invariant under simultaneous conjugation:
// adjacency is decided once per orbit of ordered pairs — x runs over
// conjugacy-class representatives, y over orbits of the centralizer of x —
// and each adjacent orbit is expanded into union-find merges by conjugating
// the representative pair by every group element. Isolation alone is cheaper
// (first adjacent orbit wins), so it has a dedicated early-exit scan.

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nonf/classes.hpp"
#include "nonf/common.hpp"
#include "nonf/group.hpp"
#include "nonf/subgroup.hpp"

namespace nonf {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<element_t>(i);
  }

  element_t find(element_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(element_t a, element_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<element_t> parent_;
};

enum class GraphMode { Explicit, OrbitReduced };

struct GraphResult {
  GraphMode mode = GraphMode::Explicit;
  std::vector<char> non_isolated;              // flag per element
  std::vector<element_t> isolated;             // sorted
  std::vector<std::int32_t> component;         // per element; -1 when isolated
  std::uint32_t component_count = 0;
  // Explicit mode: every edge (x < y). Orbit mode: one representative pair
  // per adjacent orbit of ordered pairs; the full edge set is the union of
  // their conjugates.
  std::vector<std::pair<element_t, element_t>> edges;

  std::size_t vertex_count() const {
    return non_isolated.size() - isolated.size();
  }

  std::vector<std::uint64_t> component_sizes() const {
    std::vector<std::uint64_t> s(component_count, 0);
    for (std::int32_t c : component)
      if (c >= 0) ++s[static_cast<std::size_t>(c)];
    return s;
  }

  std::vector<element_t> component_members(std::uint32_t id) const {
    std::vector<element_t> out;
    for (element_t x = 0; x < component.size(); ++x)
      if (component[x] == static_cast<std::int32_t>(id)) out.push_back(x);
    return out;
  }
};

namespace detail {

// Deterministic component labels: ids in order of each component's least
// element. Isolated vertices get -1.
inline void label_components(GraphResult& r, UnionFind& uf) {
  const std::size_t n = r.non_isolated.size();
  r.component.assign(n, -1);
  std::vector<std::int32_t> root_label(n, -1);
  std::int32_t next = 0;
  for (element_t x = 0; x < n; ++x) {
    if (!r.non_isolated[x]) {
      r.isolated.push_back(x);
      continue;
    }
    element_t root = uf.find(x);
    if (root_label[root] < 0) root_label[root] = next++;
    r.component[x] = root_label[root];
  }
  r.component_count = static_cast<std::uint32_t>(next);
}

}  // namespace detail

// All-pairs construction; adjacent(x, y) is called once per unordered pair.
template <typename Pred>
GraphResult build_graph_explicit(const FiniteGroup& g, Pred&& adjacent) {
  if (g.order() > caps().explicit_graph_cap)
    throw CapExceeded("group too large for all-pairs graph construction");
  const element_t n = g.order();
  GraphResult r;
  r.mode = GraphMode::Explicit;
  r.non_isolated.assign(n, 0);
  UnionFind uf(n);
  for (element_t x = 0; x < n; ++x)
    for (element_t y = x + 1; y < n; ++y) {
      if (!adjacent(x, y)) continue;
      r.edges.emplace_back(x, y);
      r.non_isolated[x] = r.non_isolated[y] = 1;
      uf.unite(x, y);
    }
  detail::label_components(r, uf);
  return r;
}

// Orbit-reduced construction. Requires adjacent(x, y) invariant under
// simultaneous conjugation: adjacent(x, y) == adjacent(x^t, y^t) for all t.
template <typename Pred>
GraphResult build_graph_orbit(const FiniteGroup& g, Pred&& adjacent) {
  const element_t n = g.order();
  const auto& cc = g.conjugacy_classes();
  GraphResult r;
  r.mode = GraphMode::OrbitReduced;
  r.non_isolated.assign(n, 0);
  UnionFind uf(n);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<element_t> queue, conj_x(n);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const element_t x = cc.reps[c];
    const auto cent = centralizer(g, x);
    const auto cgens = subgroup_generators(g, cent);
    for (element_t t = 0; t < n; ++t) conj_x[t] = g.conj(x, t);
    if (++epoch == 0) {  // stamped-visited epoch rollover
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    // Orbits of conjugation by the centralizer of x on all elements; each
    // orbit representative y gives one orbit of ordered pairs (x, y).
    for (element_t y0 = 0; y0 < n; ++y0) {
      if (stamp[y0] == epoch) continue;
      queue.assign(1, y0);
      stamp[y0] = epoch;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (element_t s : cgens) {
          element_t z = g.conj(queue[head], s);
          if (stamp[z] != epoch) {
            stamp[z] = epoch;
            queue.push_back(z);
          }
        }
      if (y0 == x) continue;
      if (!adjacent(x, y0)) continue;
      r.edges.emplace_back(x, y0);
      // Every conjugate pair (x^t, y0^t) is an edge.
      for (element_t t = 0; t < n; ++t) {
        element_t yt = g.conj(y0, t);
        r.non_isolated[conj_x[t]] = 1;
        r.non_isolated[yt] = 1;
        uf.unite(conj_x[t], yt);
      }
    }
  }
  detail::label_components(r, uf);
  return r;
}

// --------------------------------------------------------- the class graph ---

struct NonFGraph {
  const FiniteGroup* parent = nullptr;
  std::string class_name;
  GraphResult graph;
  std::vector<char> universal;  // x whose own cyclic subgroup is outside the class
  std::uint32_t universal_count = 0;
};

namespace detail {

// Marks whole conjugacy classes: universal[x] for every x with <x> outside
// the class (such x is adjacent to every other vertex: any <x,y> contains
// <x>, and the class is subgroup-closed).
inline void mark_universal(const FiniteGroup& g, ClassOracle& oracle, NonFGraph& out) {
  const auto& cc = g.conjugacy_classes();
  ClosureEngine e(g);
  out.universal.assign(g.order(), 0);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const element_t x = cc.reps[c];
    GenSub k;
    k.gens = {x};
    k.elems = e.closure({x});
    if (oracle.member(k)) continue;
    auto [mb, me] = cc.members_of(c);
    for (auto it = mb; it != me; ++it) out.universal[*it] = 1;
    out.universal_count += static_cast<std::uint32_t>(cc.class_size(c));
  }
}

}  // namespace detail

// The graph on g's elements with x ~ y iff <x,y> lies outside the oracle's
// class (x != y; no loops — an element generating a non-member cyclic group
// shows up as a universal vertex instead).
inline NonFGraph build_nonf_graph(const FiniteGroup& g, ClassOracle& oracle,
                                  GraphMode mode) {
  NonFGraph out;
  out.parent = &g;
  out.class_name = oracle.spec().name();
  ClosureEngine engine(g);
  auto adjacent = [&](element_t x, element_t y) {
    return !oracle.pair_member(x, y, engine);
  };
  out.graph = mode == GraphMode::Explicit ? build_graph_explicit(g, adjacent)
                                          : build_graph_orbit(g, adjacent);
  detail::mark_universal(g, oracle, out);
  return out;
}

// Isolated vertices only (no edges, no components): per conjugacy class of
// x, scan y over centralizer-of-x orbit representatives and exit the class
// on the first adjacency found.
inline std::vector<element_t> isolated_set(const FiniteGroup& g, ClassOracle& oracle) {
  const element_t n = g.order();
  const auto& cc = g.conjugacy_classes();
  ClosureEngine engine(g);
  std::vector<char> isolated_class(cc.count(), 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t epoch = 0;
  std::vector<element_t> queue;
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const element_t x = cc.reps[c];
    const auto cent = centralizer(g, x);
    const auto cgens = subgroup_generators(g, cent);
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
    bool isolated = true;
    for (element_t y0 = 0; y0 < n && isolated; ++y0) {
      if (stamp[y0] == epoch) continue;
      queue.assign(1, y0);
      stamp[y0] = epoch;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (element_t s : cgens) {
          element_t z = g.conj(queue[head], s);
          if (stamp[z] != epoch) {
            stamp[z] = epoch;
            queue.push_back(z);
          }
        }
      if (y0 != x && !oracle.pair_member(x, y0, engine)) isolated = false;
    }
    isolated_class[c] = isolated ? 1 : 0;
  }
  std::vector<element_t> out;
  for (element_t v = 0; v < n; ++v)
    if (isolated_class[cc.class_of[v]]) out.push_back(v);
  return out;
}

// Isolated vertices of the graph restricted to a subgroup h of g: x in h is
// isolated iff <x,y> is in the class for every y in h. Reduced over
// h-conjugacy classes of x; y runs over all of h with early exit.
inline std::vector<element_t> isolated_in_subgroup(const FiniteGroup& g,
                                                   ClassOracle& oracle,
                                                   const GenSub& h) {
  ClosureEngine engine(g);
  std::unordered_map<element_t, char> isolated_of;
  isolated_of.reserve(h.elems.size() * 2);
  std::vector<element_t> orbit;
  for (element_t x : h.elems) {
    if (isolated_of.count(x)) continue;
    // h-conjugacy orbit of x.
    orbit.assign(1, x);
    std::unordered_map<element_t, char> seen;
    seen.emplace(x, 1);
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (element_t s : h.gens) {
        element_t z = g.conj(orbit[head], s);
        if (seen.emplace(z, 1).second) orbit.push_back(z);
      }
    bool isolated = true;
    for (element_t y : h.elems)
      if (y != x && !oracle.pair_member(x, y, engine)) {
        isolated = false;
        break;
      }
    for (element_t m : orbit) isolated_of.emplace(m, isolated ? 1 : 0);
  }
  std::vector<element_t> out;
  for (element_t x : h.elems)
    if (isolated_of.at(x)) out.push_back(x);
  return out;
}

// ---------------------------------------------------- the generating graph ---

struct GeneratingGraphData {
  std::vector<char> in_omega;                  // flag per element
  std::vector<element_t> omega;                // sorted non-isolated vertices
  std::vector<std::int32_t> component;         // labels on omega; -1 outside
  std::uint32_t component_count = 0;
};

// Non-isolated vertices of the generating graph (x with <x,y> = G for some
// y) and the components of the subgraph they induce.
inline GeneratingGraphData generating_graph_omega(const FiniteGroup& g, GraphMode mode) {
  ClosureEngine engine(g);
  auto adjacent = [&](element_t x, element_t y) { return engine.generates(x, y); };
  GraphResult r = mode == GraphMode::Explicit ? build_graph_explicit(g, adjacent)
                                              : build_graph_orbit(g, adjacent);
  GeneratingGraphData out;
  out.in_omega = std::move(r.non_isolated);
  for (element_t x = 0; x < out.in_omega.size(); ++x)
    if (out.in_omega[x]) out.omega.push_back(x);
  out.component = std::move(r.component);
  out.component_count = r.component_count;
  return out;
}

// Omega membership alone (no components), reduced over conjugacy classes.
inline std::vector<element_t> generating_omega_only(const FiniteGroup& g) {
  const auto& cc = g.conjugacy_classes();
  ClosureEngine engine(g);
  std::vector<char> in_omega_class(cc.count(), 0);
  for (std::size_t c = 0; c < cc.count(); ++c) {
    const element_t x = cc.reps[c];
    for (element_t y = 0; y < g.order(); ++y)
      if (engine.generates(x, y)) {
        in_omega_class[c] = 1;
        break;
      }
  }
  std::vector<element_t> out;
  for (element_t v = 0; v < g.order(); ++v)
    if (in_omega_class[cc.class_of[v]]) out.push_back(v);
  return out;
}

// ------------------------------------------------------------- comparisons ---

// The class graph and the graph of the derived "all 2-generated subgroups
// in the class" class have the same edges whenever the class is
// subgroup-closed — <x,y> is itself 2-generated, so the two membership
// tests agree on it. This check computes both edge sets explicitly and
// compares; false would signal an implementation bug.
inline bool gamma_equals_gamma_f2(const FiniteGroup& g, ClassOracle& oracle) {
  ClosureEngine engine(g);
  auto base = build_graph_explicit(g, [&](element_t x, element_t y) {
    return !oracle.pair_member(x, y, engine);
  });
  ClosureEngine engine2(g);
  auto derived = build_graph_explicit(g, [&](element_t x, element_t y) {
    GenSub k;
    k.gens = {x, y};
    k.elems = engine2.pair_closure(x, y);
    return !oracle.f2_member(k);
  });
  return base.edges == derived.edges;
}

}  // namespace nonf
