#include <set>
#include <utility>

#include "catch_amalgamated.hpp"
#include "kosphere/sphere_invariants.hpp"

using namespace kosphere;

TEST_CASE("phi examples", "[sphere]") {
  CHECK(phi(1, 3) == PhiValue::Infinite);
  CHECK(phi(2, 6) == PhiValue::Two);
  CHECK(phi(0, 5) == PhiValue::One);
  CHECK(phi(-7, 3) == phi(1, 3));
  CHECK(phi(2, -2) == phi(2, 6));
}

TEST_CASE("phi is 8-periodic in each argument", "[sphere][property]") {
  for (int n = 0; n <= 15; ++n)
    for (int m = 0; m <= 15; ++m) {
      CHECK(phi(n, m) == phi(n + 8, m));
      CHECK(phi(n, m) == phi(n, m + 8));
    }
}

TEST_CASE("phi table reproduces the reference", "[sphere]") {
  PhiTable t = phi_table();
  for (int m = 0; m < 8; ++m)
    CHECK(t[0][m] == PhiValue::One);
  CHECK(t[3][1] == PhiValue::Infinite);
  CHECK(t[7][2] == PhiValue::Two);
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      CHECK(t[n][m] == reference_phi_table()[n][m]);
}

TEST_CASE("order table reproduces the reference", "[sphere]") {
  PhiTable t = bott_order_table();
  CHECK(t[0][0] == PhiValue::Infinite);
  CHECK(t[1][0] == PhiValue::Two);
  CHECK(t[3][0] == PhiValue::One);
  for (int n = 0; n < 8; ++n)
    for (int m = 0; m < 8; ++m)
      CHECK(t[n][m] == reference_order_table()[n][m]);
}

TEST_CASE("reduced invariants of spheres", "[sphere]") {
  CHECK(ko_sphere_reduced(KODegree{0}, 8).is_full());
  for (int n : {1, 5, 9, 13})
    CHECK(ko_sphere_reduced(KODegree{n}, n).is_zero());
  CHECK(ko_sphere_reduced(KODegree{-1}, 3).is_zero());
  CHECK(ko_sphere_reduced(KODegree{-1}, 3).ambient == GroupKind::InfiniteCyclic);
  CHECK(ko_sphere_reduced(KODegree{-2}, 3).ambient == GroupKind::Trivial);

  for (int n = 0; n < 20; ++n)
    CHECK(ko_sphere_reduced(KODegree{0}, n).is_full() == (n % 4 != 3 || ko_group_kind(KODegree{-n}) == GroupKind::Trivial));

  CHECK(ku_sphere_reduced(0, 2).is_full());
  CHECK(ku_sphere_reduced(0, 3).is_zero());
  CHECK(ku_sphere_reduced(1, 2).ambient == GroupKind::Trivial);
}

TEST_CASE("kgroups_product", "[sphere]") {
  ProductKGroupReport c11 = kgroups_product(1, 1, Field::C);
  CHECK(c11.wedge.ambient.kind == GroupKind::InfiniteCyclic);
  CHECK(c11.wedge.index.is_infinite());

  ProductKGroupReport r26 = kgroups_product(2, 6, Field::R);
  CHECK(r26.wedge.ambient == GroupDescriptor{GroupKind::InfiniteCyclic, "λ"});
  CHECK(r26.wedge.index == GroupIndex::finite(2));

  CHECK(kgroups_product(4, 4, Field::R).wedge.index == GroupIndex::finite(1));
  CHECK(kgroups_product(2, 2, Field::H).wedge.index == to_index(phi(2, 6)));
  CHECK(kgroups_product(2, 2, Field::H).wedge.ambient.kind == GroupKind::InfiniteCyclic);
  CHECK_THROWS_AS(kgroups_product(0, 2, Field::R), std::invalid_argument);

  for (int n = 1; n <= 16; ++n)
    for (int m = 1; m <= 16; ++m) {
      ProductKGroupReport r = kgroups_product(n, m, Field::C);
      bool zero = r.wedge.ambient.kind != GroupKind::Trivial && r.wedge.index.is_infinite();
      CHECK(zero == (n % 2 == 1 && m % 2 == 1));
      for (Field f : {Field::R, Field::C, Field::H})
        for (const auto &fac : kgroups_product(n, m, f).factors)
          CHECK(fac.index == GroupIndex::finite(1));
    }
}

TEST_CASE("kr_obstruction", "[sphere]") {
  CHECK_FALSE(kr_obstruction(2, 2));
  CHECK(kr_obstruction(4, 4));
  CHECK(kr_obstruction(1, 2));
  CHECK(kr_obstruction_witness(2, 2) == KOElement::one());

  std::set<std::pair<int, int>> failing;
  for (int n = 1; n <= 16; ++n)
    for (int m = 1; m <= 16; ++m)
      if (!kr_obstruction(n, m))
        failing.insert({n, m});
  for (auto [n, m] : failing)
    CHECK(failing.count({m, n}) == 1);
  for (int n = 1; n <= 16; ++n)
    for (int m = 1; m <= 16; ++m) {
      bool both_odd = n % 2 == 1 && m % 2 == 1;
      bool congruence = (n % 4 == 2 && (m % 4 == 2 || m % 4 == 3)) || (m % 4 == 2 && (n % 4 == 2 || n % 4 == 3));
      bool fails = failing.count({n, m}) || failing.count({m, n});
      if (!both_odd)
        CHECK(fails == congruence);
    }
}
