#include <catch2/catch_amalgamated.hpp>

#include "naive.hpp"
#include "nonf/classes.hpp"
#include "nonf/families.hpp"
#include "nonf/graph.hpp"

using namespace nonf;

namespace {

// Reference adjacency: generate the pair subgroup with plain sets and decide
// class membership from first principles (no oracle shortcuts).
bool reference_adjacent(const FiniteGroup& g, ClassKind kind, element_t x, element_t y) {
  if (x == y) return false;
  naive::Set h = naive::closure(g, {x, y});
  switch (kind) {
    case ClassKind::Cyclic: return !naive::is_cyclic_set(g, h);
    case ClassKind::Abelian: return !naive::is_abelian_set(g, h);
    case ClassKind::Nilpotent: return !naive::is_nilpotent_set(g, h);
    case ClassKind::Soluble: return !naive::is_soluble_set(g, h);
    default: return false;
  }
}

std::set<std::pair<element_t, element_t>> expand_edges(const FiniteGroup& g,
                                                       const GraphResult& r) {
  std::set<std::pair<element_t, element_t>> out;
  if (r.mode == GraphMode::Explicit) {
    out.insert(r.edges.begin(), r.edges.end());
    return out;
  }
  for (const auto& [x, y] : r.edges)
    for (element_t t = 0; t < g.order(); ++t) {
      element_t a = g.conj(x, t), b = g.conj(y, t);
      if (a > b) std::swap(a, b);
      out.emplace(a, b);
    }
  return out;
}

}  // namespace

TEST_CASE("graph matches the reference adjacency on small groups") {
  for (const char* name : {"sym(3)", "genquat(8)", "alt(4)", "dihedral(8)", "cyclic(12)"}) {
    GroupPtr g = build_family(name);
    for (ClassKind kind : {ClassKind::Cyclic, ClassKind::Abelian, ClassKind::Nilpotent}) {
      ClassOracle oracle(*g, make_class(kind));
      NonFGraph built = build_nonf_graph(*g, oracle, GraphMode::Explicit);
      auto adj = [&](element_t x, element_t y) { return reference_adjacent(*g, kind, x, y); };
      naive::Set ref_iso = naive::isolated_vertices(*g, adj);
      REQUIRE(built.graph.isolated == naive::to_vec(ref_iso));
      auto ref_comps = naive::components(*g, adj);
      REQUIRE(built.graph.component_count == ref_comps.size());
      // edge sets agree
      std::set<std::pair<element_t, element_t>> ref_edges;
      for (element_t x = 0; x < g->order(); ++x)
        for (element_t y = x + 1; y < g->order(); ++y)
          if (adj(x, y)) ref_edges.emplace(x, y);
      REQUIRE(expand_edges(*g, built.graph) == ref_edges);
    }
  }
}

TEST_CASE("frozen edge and component counts") {
  struct Row {
    const char* family;
    ClassKind kind;
    std::size_t isolated, edges, components;
  };
  const Row rows[] = {
      {"sym(3)", ClassKind::Abelian, 1, 9, 1},
      {"dihedral(8)", ClassKind::Abelian, 2, 72, 1},
      {"genquat(8)", ClassKind::Abelian, 2, 12, 1},
  };
  for (const auto& row : rows) {
    GroupPtr g = build_family(row.family);
    ClassOracle oracle(*g, make_class(row.kind));
    NonFGraph built = build_nonf_graph(*g, oracle, GraphMode::Explicit);
    CAPTURE(row.family);
    REQUIRE(built.graph.isolated.size() == row.isolated);
    REQUIRE(built.graph.edges.size() == row.edges);
    REQUIRE(built.graph.component_count == row.components);
  }
}

TEST_CASE("orbit mode and explicit mode agree on isolated sets and components") {
  for (const char* name :
       {"sym(4)", "w72", "ea52s3", "frob(13,4)", "v16s3", "syl2s8", "a4xc5"}) {
    GroupPtr g = build_family(name);
    for (ClassKind kind : {ClassKind::Cyclic, ClassKind::Nilpotent, ClassKind::Soluble}) {
      ClassOracle o1(*g, make_class(kind));
      ClassOracle o2(*g, make_class(kind));
      NonFGraph ex = build_nonf_graph(*g, o1, GraphMode::Explicit);
      NonFGraph orb = build_nonf_graph(*g, o2, GraphMode::OrbitReduced);
      CAPTURE(name, int(kind));
      REQUIRE(ex.graph.isolated == orb.graph.isolated);
      REQUIRE(ex.graph.component_count == orb.graph.component_count);
      // same partition of vertices into components
      std::map<std::int32_t, std::set<element_t>> pe, po;
      for (element_t x = 0; x < g->order(); ++x) {
        if (ex.graph.component[x] >= 0) pe[ex.graph.component[x]].insert(x);
        if (orb.graph.component[x] >= 0) po[orb.graph.component[x]].insert(x);
      }
      std::set<std::set<element_t>> se, so;
      for (auto& [k, v] : pe) se.insert(v);
      for (auto& [k, v] : po) so.insert(v);
      REQUIRE(se == so);
      REQUIRE(expand_edges(*g, ex.graph) == expand_edges(*g, orb.graph));
    }
  }
}

TEST_CASE("universal vertices are adjacent to everything") {
  GroupPtr c30 = build_family("cyclic(30)");
  ClassOracle oracle(*c30, make_class(ClassKind::AtMostTwoPrimes));
  NonFGraph built = build_nonf_graph(*c30, oracle, GraphMode::Explicit);
  REQUIRE(built.universal_count > 0);
  ClosureEngine e(*c30);
  for (element_t x = 0; x < c30->order(); ++x) {
    if (!built.universal[x]) continue;
    for (element_t y = 0; y < c30->order(); ++y)
      if (y != x) REQUIRE_FALSE(oracle.pair_member(x, y, e));
  }
}

TEST_CASE("generating graph vertex sets") {
  GroupPtr c6 = build_family("cyclic(6)");
  REQUIRE(generating_omega_only(*c6).size() == 6);  // identity pairs with a generator
  GroupPtr s3 = build_family("sym(3)");
  REQUIRE(generating_omega_only(*s3).size() == 5);  // identity generates with nothing
  GroupPtr a4 = build_family("alt(4)");
  auto omega = generating_omega_only(*a4);
  // every nonidentity element sits in a generating pair; the identity never
  // does (its pairs generate cyclic subgroups)
  REQUIRE(omega.size() == 11);
  for (element_t x : omega) REQUIRE(x != kIdentity);
}

TEST_CASE("edgeless graphs report every vertex isolated") {
  GroupPtr c12 = build_family("cyclic(12)");
  ClassOracle oracle(*c12, make_class(ClassKind::Cyclic));
  NonFGraph built = build_nonf_graph(*c12, oracle, GraphMode::Explicit);
  REQUIRE(built.graph.isolated.size() == 12);
  REQUIRE(built.graph.vertex_count() == 0);
  REQUIRE(built.graph.component_count == 0);
}

TEST_CASE("isolated set helper equals the graph's isolated set") {
  for (const char* name : {"sym(4)", "w72", "d4xc2"}) {
    GroupPtr g = build_family(name);
    for (ClassKind kind : {ClassKind::Cyclic, ClassKind::Abelian, ClassKind::Nilpotent}) {
      ClassOracle o1(*g, make_class(kind));
      ClassOracle o2(*g, make_class(kind));
      NonFGraph built = build_nonf_graph(*g, o1, GraphMode::Explicit);
      REQUIRE(isolated_set(*g, o2) == built.graph.isolated);
    }
  }
}

TEST_CASE("subgroup-restricted isolated sets match materialized subgraphs") {
  GroupPtr g = build_family("sym(4)");
  ClassOracle oracle(*g, make_class(ClassKind::Abelian));
  for (const auto& node : all_subgroups(*g).nodes) {
    if (node.elems.size() <= 1) continue;
    GenSub h;
    h.elems = node.elems;
    h.gens = node.gens.empty() ? subgroup_generators(*g, node.elems) : node.gens;
    std::vector<element_t> got = isolated_in_subgroup(*g, oracle, h);
    // reference: materialize and build the subgroup's own graph
    Materialized m = materialize_subgroup(*g, node.elems);
    ClassOracle so(*m.group, oracle.spec());
    NonFGraph sub = build_nonf_graph(*m.group, so, GraphMode::Explicit);
    std::vector<element_t> expect;
    for (element_t v : sub.graph.isolated) expect.push_back(m.to_parent[v]);
    std::sort(expect.begin(), expect.end());
    REQUIRE(got == expect);
  }
}
