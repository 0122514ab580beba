#include <catch2/catch_amalgamated.hpp>

#include "naive.hpp"
#include "nonf/families.hpp"
#include "nonf/subgroup.hpp"

using namespace nonf;

namespace {

std::set<std::vector<element_t>> lattice_as_sets(const FiniteGroup& g) {
  std::set<std::vector<element_t>> out;
  for (const auto& node : all_subgroups(g).nodes) out.insert(node.elems);
  return out;
}

}  // namespace

TEST_CASE("subgroup lattices match the reference enumeration") {
  for (const char* name :
       {"cyclic(12)", "sym(3)", "genquat(8)", "alt(4)", "dihedral(6)", "abelian(2,2,2)"}) {
    GroupPtr g = build_family(name);
    std::set<std::vector<element_t>> ref;
    for (const auto& s : naive::all_subgroups(*g)) ref.insert(naive::to_vec(s));
    REQUIRE(lattice_as_sets(*g) == ref);
  }
}

TEST_CASE("quaternion group has six subgroups") {
  GroupPtr q8 = build_family("genquat(8)");
  REQUIRE(all_subgroups(*q8).nodes.size() == 6);
}

TEST_CASE("closure engine agrees with the set-based reference") {
  for (const char* name : {"sym(4)", "w72", "frob(13,4)"}) {
    GroupPtr g = build_family(name);
    ClosureEngine e(*g);
    for (element_t x = 0; x < g->order(); x += 3)
      for (element_t y = x; y < g->order(); y += 5) {
        auto got = e.pair_closure(x, y);
        REQUIRE(got == naive::to_vec(naive::closure(*g, {x, y})));
      }
  }
}

TEST_CASE("normal subgroups match the reference on small groups") {
  for (const char* name : {"sym(4)", "dihedral(6)", "genquat(8)", "alt(4)", "s3xc4"}) {
    GroupPtr g = build_family(name);
    std::set<std::vector<element_t>> ref;
    for (const auto& s : naive::normal_subgroups(*g)) ref.insert(naive::to_vec(s));
    std::set<std::vector<element_t>> got;
    for (const auto& n : normal_subgroups(*g)) got.insert(n);
    REQUIRE(got == ref);
  }
}

TEST_CASE("derived series and solubility") {
  GroupPtr s4 = build_family("sym(4)");
  auto series = derived_series(*s4, whole_group(*s4));
  REQUIRE(series.back().trivial());
  std::vector<std::size_t> sizes;
  for (const auto& t : series) sizes.push_back(t.order());
  REQUIRE(sizes == std::vector<std::size_t>{24, 12, 4, 1});

  GroupPtr a5 = build_family("alt(5)");
  REQUIRE_FALSE(derived_series(*a5, whole_group(*a5)).back().trivial());
  REQUIRE(naive::is_soluble(*s4));
}

TEST_CASE("sylow subgroups have the right orders and match references") {
  for (const char* name : {"sym(4)", "frob(7,3)", "w72", "a4xc5"}) {
    GroupPtr g = build_family(name);
    for (std::uint32_t p : prime_divisors(g->order())) {
      auto syl = sylow_subgroup(*g, p);
      std::uint64_t expect = 1, n = g->order();
      while (n % p == 0) {
        n /= p;
        expect *= p;
      }
      REQUIRE(syl.size() == expect);
      REQUIRE(is_subgroup(*g, syl));
      if (g->order() <= 72) {
        // reference finds one Sylow subgroup; the two must be conjugate, so
        // equal orders suffice as a cross-check
        REQUIRE(naive::sylow_subgroup(*g, p).size() == expect);
      }
    }
  }
}

TEST_CASE("frattini subgroup via maximal intersections") {
  GroupPtr c8x8 = build_family("abelian(8,8)");
  std::size_t order8 = 0;
  for (element_t x = 0; x < c8x8->order(); ++x)
    if (c8x8->order_of(x) == 8) ++order8;
  REQUIRE(order8 == 48);
  SubgroupLattice lat = all_subgroups(*c8x8);
  REQUIRE(frattini_subgroup(*c8x8, lat).size() == 16);

  for (const char* name : {"genquat(8)", "dihedral(8)", "cyclic(12)", "alt(4)"}) {
    GroupPtr g = build_family(name);
    SubgroupLattice l = all_subgroups(*g);
    REQUIRE(frattini_subgroup(*g, l) == naive::to_vec(naive::frattini(*g)));
  }
}

TEST_CASE("maximal subgroups of small groups") {
  GroupPtr a4 = build_family("alt(4)");
  SubgroupLattice lat = all_subgroups(*a4);
  auto maxidx = maximal_subgroups(lat);
  REQUIRE(maxidx.size() == 5);  // the four-group and four order-3 points

  GroupPtr c12 = build_family("cyclic(12)");
  SubgroupLattice lat12 = all_subgroups(*c12);
  std::multiset<std::size_t> sizes;
  for (auto i : maximal_subgroups(lat12)) sizes.insert(lat12.nodes[i].elems.size());
  REQUIRE(sizes == std::multiset<std::size_t>{4, 6});
}

TEST_CASE("minimum generator counts") {
  REQUIRE(min_generators(*build_family("cyclic(6)")).count == 1);
  REQUIRE(min_generators(*build_family("abelian(2,2,2)")).count == 3);
  REQUIRE(min_generators(*build_family("sym(4)")).count == 2);
  REQUIRE(min_generators(*build_family("genquat(8)")).count == 2);
  for (const char* name : {"cyclic(9)", "dihedral(6)", "alt(4)", "abelian(2,4)", "s3xc4"}) {
    GroupPtr g = build_family(name);
    MinGenerators mg = min_generators(*g);
    REQUIRE(mg.exact);
    REQUIRE(mg.count == naive::min_generators(*g));
  }
}

TEST_CASE("derived length of the large power-of-two corpus member") {
  GroupPtr g = build_family("syl2s8");
  auto series = derived_series(*g, whole_group(*g));
  REQUIRE(series.size() == 4);  // three strict steps then trivial
  REQUIRE(series.back().trivial());
}

TEST_CASE("socle and minimal normal subgroups") {
  GroupPtr a4 = build_family("alt(4)");
  auto mins = minimal_normal_subgroups(*a4);
  REQUIRE(mins.size() == 1);
  REQUIRE(mins[0].size() == 4);
  REQUIRE(socle(*a4).size() == 4);

  GroupPtr c30 = build_family("cyclic(30)");
  REQUIRE(minimal_normal_subgroups(*c30).size() == 3);
  REQUIRE(socle(*c30).size() == 30);  // product of the three prime layers

  GroupPtr a5 = build_family("alt(5)");
  auto m5 = minimal_normal_subgroups(*a5);
  REQUIRE(m5.size() == 1);
  REQUIRE(m5[0].size() == 60);  // simple group: the group itself
}

TEST_CASE("centralizers and normal cores") {
  GroupPtr d6 = build_family("dihedral(6)");  // order 12
  for (element_t x = 0; x < d6->order(); ++x) {
    auto c = centralizer(*d6, x);
    for (element_t t : c) REQUIRE(d6->mul(t, x) == d6->mul(x, t));
    REQUIRE(is_subgroup(*d6, c));
  }
  GroupPtr s4 = build_family("sym(4)");
  SubgroupLattice lat = all_subgroups(*s4);
  for (auto i : maximal_subgroups(lat)) {
    auto core = normal_core(*s4, lat.nodes[i].elems);
    REQUIRE(is_subgroup(*s4, core));
    REQUIRE(naive::is_normal(*s4, naive::Set(core.begin(), core.end())));
  }
}

TEST_CASE("fitting subgroup of the symmetric group on four points") {
  GroupPtr s4 = build_family("sym(4)");
  REQUIRE(fitting_subgroup(*s4).size() == 4);
  GroupPtr nil = build_family("d4xc2");
  REQUIRE(fitting_subgroup(*nil).size() == nil->order());  // nilpotent group
}
