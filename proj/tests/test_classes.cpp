#include <catch2/catch_amalgamated.hpp>

#include "naive.hpp"
#include "nonf/classes.hpp"
#include "nonf/families.hpp"

using namespace nonf;

namespace {

// Reference predicate for a pair: compute the generated subgroup with plain
// sets and decide membership from first principles.
bool reference_pair_in_class(const FiniteGroup& g, ClassKind kind, element_t x, element_t y) {
  naive::Set h = naive::closure(g, {x, y});
  switch (kind) {
    case ClassKind::Cyclic: return naive::is_cyclic_set(g, h);
    case ClassKind::Abelian: return naive::is_abelian_set(g, h);
    case ClassKind::Nilpotent: return naive::is_nilpotent_set(g, h);
    case ClassKind::Soluble: return naive::is_soluble_set(g, h);
    case ClassKind::OnePrime:
      return prime_divisors(static_cast<std::uint32_t>(h.size())).size() <= 1;
    case ClassKind::AtMostTwoPrimes:
      return prime_divisors(static_cast<std::uint32_t>(h.size())).size() <= 2;
    case ClassKind::Metabelian:
      return naive::is_abelian_set(g, naive::derived_subgroup(g, h));
    default: return false;
  }
}

}  // namespace

TEST_CASE("pair membership matches reference predicates") {
  for (const char* name : {"sym(4)", "genquat(8)", "w72", "a4xc5", "frob(5,4)", "sym(5)"}) {
    GroupPtr g = build_family(name);
    ClosureEngine engine(*g);
    for (ClassKind kind :
         {ClassKind::Cyclic, ClassKind::Abelian, ClassKind::Nilpotent, ClassKind::Soluble,
          ClassKind::OnePrime, ClassKind::AtMostTwoPrimes, ClassKind::Metabelian}) {
      ClassOracle oracle(*g, make_class(kind));
      for (element_t x = 0; x < g->order(); x += 7)
        for (element_t y = 0; y < g->order(); y += 3)
          REQUIRE(oracle.pair_member(x, y, engine) ==
                  reference_pair_in_class(*g, kind, x, y));
    }
  }
}

TEST_CASE("whole-group membership on known examples") {
  auto in = [](const char* name, ClassKind k) {
    GroupPtr g = build_family(name);
    ClassOracle o(*g, make_class(k));
    return o.member(whole_group(*g));
  };
  REQUIRE(in("cyclic(12)", ClassKind::Cyclic));
  REQUIRE_FALSE(in("abelian(2,2)", ClassKind::Cyclic));
  REQUIRE(in("abelian(2,2)", ClassKind::Abelian));
  REQUIRE_FALSE(in("sym(3)", ClassKind::Abelian));
  REQUIRE(in("genquat(8)", ClassKind::Nilpotent));
  REQUIRE_FALSE(in("sym(3)", ClassKind::Nilpotent));
  REQUIRE(in("sym(3)", ClassKind::Supersoluble));
  REQUIRE_FALSE(in("alt(4)", ClassKind::Supersoluble));  // no normal order-3 chain
  REQUIRE(in("sym(4)", ClassKind::Soluble));
  REQUIRE_FALSE(in("alt(5)", ClassKind::Soluble));
  REQUIRE_FALSE(in("sym(4)", ClassKind::NilpotentDerived));  // derived subgroup is alt(4)
  REQUIRE(in("sym(3)", ClassKind::Metabelian));
  REQUIRE_FALSE(in("sym(4)", ClassKind::Metabelian));  // derived length 3
  REQUIRE(in("cyclic(12)", ClassKind::AtMostTwoPrimes));
  REQUIRE_FALSE(in("cyclic(30)", ClassKind::AtMostTwoPrimes));
  REQUIRE(in("syl2s8", ClassKind::OnePrime));
  REQUIRE_FALSE(in("sym(3)", ClassKind::OnePrime));
}

TEST_CASE("derived subgroup of sym(4) is not nilpotent") {
  // pinning the edge case commented above
  GroupPtr s4 = build_family("sym(4)");
  GenSub d = derived_subgroup(*s4, whole_group(*s4).gens);
  REQUIRE(d.order() == 12);
  REQUIRE_FALSE(naive::is_nilpotent_set(
      *s4, naive::Set(d.elems.begin(), d.elems.end())));
  ClassOracle o(*s4, make_class(ClassKind::NilpotentDerived));
  REQUIRE_FALSE(o.member(whole_group(*s4)));
}

TEST_CASE("fitting length classes") {
  GroupPtr d4 = build_family("dihedral(4)");
  ClassOracle o1(*d4, make_fitting_class(1));
  REQUIRE(o1.member(whole_group(*d4)));  // nilpotent = Fitting length 1
  GroupPtr s3 = build_family("sym(3)");
  ClassOracle o2(*s3, make_fitting_class(1));
  REQUIRE_FALSE(o2.member(whole_group(*s3)));
  ClassOracle o3(*s3, make_fitting_class(2));
  REQUIRE(o3.member(whole_group(*s3)));
  GroupPtr s4 = build_family("sym(4)");
  ClassOracle o4(*s4, make_fitting_class(2));
  REQUIRE_FALSE(o4.member(whole_group(*s4)));
  ClassOracle o5(*s4, make_fitting_class(3));
  REQUIRE(o5.member(whole_group(*s4)));
  REQUIRE(fitting_length(build_family("sym(4)")) == std::optional<std::uint32_t>{3});
  REQUIRE(fitting_length(build_family("alt(5)")) == std::nullopt);  // not soluble
}

TEST_CASE("forbidden-pattern classes exclude exactly the pattern carriers") {
  ClassSpec spec = make_forbidden_class({build_family("genquat(8)")}, {"genquat(8)"});
  for (const char* name : {"cyclic(16)", "dihedral(8)", "sym(4)", "abelian(4,4)"}) {
    GroupPtr g = build_family(name);
    ClassOracle o(*g, spec);
    REQUIRE(o.member(whole_group(*g)));
  }
  for (const char* name : {"genquat(8)", "genquat(16)", "w72", "syl2s8"}) {
    GroupPtr g = build_family(name);
    ClassOracle o(*g, spec);
    REQUIRE_FALSE(o.member(whole_group(*g)));  // all contain a quaternion section
  }
}

TEST_CASE("class membership is inherited by subgroups") {
  // subgroup-closure smoke: every subgroup of a member is a member
  for (ClassKind kind : {ClassKind::Abelian, ClassKind::Nilpotent, ClassKind::Soluble,
                         ClassKind::AtMostTwoPrimes}) {
    for (const char* name : {"abelian(8,8)", "genquat(16)", "sym(4)", "frob(7,3)"}) {
      GroupPtr g = build_family(name);
      ClassOracle o(*g, make_class(kind));
      if (!o.member(whole_group(*g))) continue;
      for (const auto& node : all_subgroups(*g).nodes) {
        GenSub h;
        h.elems = node.elems;
        h.gens = node.gens.empty() ? subgroup_generators(*g, node.elems) : node.gens;
        REQUIRE(o.member(h));
      }
    }
  }
}

TEST_CASE("chief series multiplies back to the group order") {
  for (const char* name : {"sym(4)", "w72", "ea52s3", "frob(13,4)"}) {
    GroupPtr g = build_family(name);
    std::uint64_t prod = 1;
    for (const auto& f : chief_series(g)) {
      prod *= f.order;
      if (f.elementary_abelian) {
        std::uint64_t expect = 1;
        for (std::uint32_t i = 0; i < f.rank; ++i) expect *= f.prime;
        REQUIRE(f.order == expect);
      }
    }
    REQUIRE(prod == g->order());
  }
}

TEST_CASE("class spec names round-trip through the parser") {
  for (const char* text : {"cyclic", "abelian", "nilpotent", "soluble", "one-prime",
                           "two-primes", "metabelian", "supersoluble", "fitting<=2"}) {
    ClassSpec spec = parse_class_spec(text, build_family);
    REQUIRE(spec.name() == text);
  }
  ClassSpec fb = parse_class_spec("forbid:genquat(8),sym(3)", build_family);
  REQUIRE(fb.kind == ClassKind::ForbiddenSubgroups);
  REQUIRE(fb.forbidden.size() == 2);
  REQUIRE(fb.name() == "forbid:genquat(8),sym(3)");
}
