#include <catch2/catch_amalgamated.hpp>

#include "naive.hpp"
#include "nonf/families.hpp"
#include "nonf/group.hpp"

using namespace nonf;

TEST_CASE("cyclic and symmetric groups have the expected element orders") {
  GroupPtr c6 = build_family("cyclic(6)");
  REQUIRE(c6->order() == 6);
  std::multiset<std::uint32_t> orders;
  for (element_t x = 0; x < 6; ++x) orders.insert(c6->order_of(x));
  REQUIRE(orders == std::multiset<std::uint32_t>{1, 2, 3, 3, 6, 6});

  GroupPtr s3 = build_family("sym(3)");
  REQUIRE(s3->order() == 6);
  orders.clear();
  for (element_t x = 0; x < 6; ++x) orders.insert(s3->order_of(x));
  REQUIRE(orders == std::multiset<std::uint32_t>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("family orders match their formulas") {
  REQUIRE(build_family("dihedral(8)")->order() == 16);
  REQUIRE(build_family("genquat(16)")->order() == 16);
  REQUIRE(build_family("sym(5)")->order() == 120);
  REQUIRE(build_family("alt(5)")->order() == 60);
  REQUIRE(build_family("ea(3,3)")->order() == 27);
  REQUIRE(build_family("abelian(6,6)")->order() == 36);
  REQUIRE(build_family("frob(7,3)")->order() == 21);
  REQUIRE(build_family("w72")->order() == 72);
  REQUIRE(build_family("ea52s3")->order() == 150);
  REQUIRE(build_family("ea52c12")->order() == 300);
  REQUIRE(build_family("v16s3")->order() == 96);
  REQUIRE(build_family("syl2s8")->order() == 128);
  REQUIRE(build_family("ex1inner(2)")->order() == 648);
  REQUIRE(build_family("ex1inner(3)")->order() == 5832);
}

TEST_CASE("long family aliases resolve") {
  REQUIRE(build_family("generalized_quaternion(8)")->order() == 8);
  REQUIRE(build_family("symmetric(4)")->order() == 24);
  REQUIRE(build_family("alternating(5)")->order() == 60);
  REQUIRE(build_family("elementary_abelian(5,2)")->order() == 25);
  REQUIRE(build_family("example1_inner(2)")->order() == 648);
  REQUIRE(build_family("sylow2_sym8")->order() == 128);
}

TEST_CASE("conjugacy classes agree with a quadratic reference") {
  for (const char* name : {"sym(4)", "genquat(8)", "dihedral(6)", "w72", "frob(5,4)"}) {
    GroupPtr g = build_family(name);
    auto ref = naive::conjugacy_classes(*g);
    const auto& cc = g->conjugacy_classes();
    REQUIRE(cc.count() == ref.size());
    for (const auto& cls : ref) {
      // every reference class is one library class
      element_t id = cc.class_of[cls.front()];
      REQUIRE(cc.class_size(id) == cls.size());
      for (element_t x : cls) REQUIRE(cc.class_of[x] == id);
    }
  }
}

TEST_CASE("quaternion group class sizes") {
  GroupPtr q8 = build_family("genquat(8)");
  std::multiset<std::size_t> sizes;
  const auto& cc = q8->conjugacy_classes();
  for (std::size_t c = 0; c < cc.count(); ++c) sizes.insert(cc.class_size(c));
  REQUIRE(sizes == std::multiset<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("centers match the quadratic reference") {
  for (const char* name : {"genquat(8)", "dihedral(8)", "sym(4)", "w72", "syl2s8"}) {
    GroupPtr g = build_family(name);
    REQUIRE(naive::to_vec(naive::center(*g)) == center(*g));
  }
}

TEST_CASE("direct product flattens component orders") {
  GroupPtr g = build_family("a4xc5");
  REQUIRE(g->order() == 60);
  std::uint32_t max_order = 0;
  for (element_t x = 0; x < g->order(); ++x)
    max_order = std::max(max_order, g->order_of(x));
  REQUIRE(max_order == 15);  // lcm of an order-3 element and the C5 factor
}

TEST_CASE("inverse and power behave on every corpus group up to 200") {
  for (const auto& e : corpus()) {
    GroupPtr g = e.build();
    if (g->order() > 200) continue;
    for (element_t x = 0; x < g->order(); ++x) {
      REQUIRE(g->mul(x, g->inv(x)) == kIdentity);
      REQUIRE(g->power(x, g->order_of(x)) == kIdentity);
    }
  }
}

TEST_CASE("quotient by the center of the quaternion group is a four-group") {
  GroupPtr q8 = build_family("genquat(8)");
  auto z = center(*q8);
  auto [q, hom] = quotient(q8, z);
  REQUIRE(q->order() == 4);
  for (element_t x = 0; x < q->order(); ++x) REQUIRE(q->mul(x, x) == kIdentity);
  REQUIRE(hom.check());
}

TEST_CASE("quotient projection is a homomorphism on corpus samples") {
  for (const char* name : {"sym(4)", "w72", "ea52s3", "d4xc2"}) {
    GroupPtr g = build_family(name);
    for (const auto& n : normal_subgroups(*g)) {
      if (n.size() == 1 || n.size() == g->order()) continue;
      auto [q, hom] = quotient(g, n);
      REQUIRE(q->order() * n.size() == g->order());
      REQUIRE(hom.check());
      break;  // one proper quotient per group keeps this quick
    }
  }
}
