#include "catch_amalgamated.hpp"
#include "kosphere/bilinear.hpp"
#include "oracles.hpp"

using namespace kosphere;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int r = 0;
  for (auto row : rows) {
    int c = 0;
    for (auto v : row)
      m(r, c++) = v;
    ++r;
  }
  return m;
}

// (x1 + i x2)(y1 + i y2) with the textbook signs
BilinearMap complex_mult() {
  return BilinearMap(2, 2, 2, {mat({{1, 0}, {0, -1}}), mat({{0, 1}, {1, 0}})});
}

} // namespace

TEST_CASE("radon_hurwitz", "[bilinear]") {
  CHECK(radon_hurwitz(16) == 9);
  CHECK(radon_hurwitz(8) == 8);
  CHECK(radon_hurwitz(12) == 4);
  CHECK(radon_hurwitz(1) == 1);
  CHECK(radon_hurwitz(2) == 2);
  CHECK(radon_hurwitz(32) == 10);
  CHECK(radon_hurwitz(256) == 17);
  CHECK(radon_hurwitz(3 * 128) == 16);
  CHECK_THROWS_AS(radon_hurwitz(0), std::invalid_argument);
  CHECK_THROWS_AS(radon_hurwitz(-4), std::invalid_argument);
}

TEST_CASE("binom_odd agrees with exact binomials", "[bilinear][property]") {
  CHECK_FALSE(binom_odd(1, 1));
  CHECK(binom_odd(2, 4));
  CHECK_FALSE(binom_odd(3, 7));
  for (int n = 0; n <= 40; ++n)
    for (int m = 0; m <= 40; ++m)
      CHECK(binom_odd(n, m) == (oracle::binomial(n + m, n) % 2 == 1));
}

TEST_CASE("hr_family examples", "[bilinear]") {
  HRFamily one = hr_family(1, 1);
  REQUIRE(one.mats.size() == 1);
  CHECK(one.mats[0] == IntMatrix::identity(1));

  HRFamily two = hr_family(2, 2);
  REQUIRE(two.mats.size() == 2);
  CHECK(two.mats[0] == IntMatrix::identity(2));
  CHECK(two.mats[1] == mat({{0, 1}, {-1, 0}}));

  HRFamily four = hr_family(4, 4);
  CHECK(verify_hr(four));
  // the non-identity members square to -I, as left multiplication by unit quaternions does
  for (int i = 1; i < 4; ++i)
    CHECK(four.mats[i] * four.mats[i] == -IntMatrix::identity(4));
  CHECK(four.mats[1] * four.mats[2] == -(four.mats[2] * four.mats[1]));
}

TEST_CASE("hr_family(k, rho(k)) is exact for k in 1..64", "[bilinear][property]") {
  for (int k = 1; k <= 64; ++k) {
    HRFamily fam = hr_family(k, radon_hurwitz(k));
    INFO("k = " << k);
    CHECK(fam.k == k);
    CHECK(static_cast<int>(fam.mats.size()) == radon_hurwitz(k));
    CHECK(fam.mats[0] == IntMatrix::identity(k));
    CHECK(verify_hr(fam));
    for (const auto &b : fam.mats) {
      // signed permutation
      for (int r = 0; r < k; ++r) {
        int nonzero = 0;
        for (int c = 0; c < k; ++c) {
          CHECK(std::abs(b(r, c)) <= 1);
          nonzero += b(r, c) != 0;
        }
        CHECK(nonzero == 1);
      }
    }
  }
}

TEST_CASE("hr_family capacity", "[bilinear]") {
  CHECK_THROWS_AS(hr_family(8, 9), capacity_error);
  CHECK_THROWS_AS(hr_family(3, 2), capacity_error);
  CHECK_NOTHROW(hr_family(16, 9));
  CHECK_THROWS_AS(hr_to_bilinear(hr_family(4, 2), 3), capacity_error);
}

TEST_CASE("tampered family is caught", "[bilinear]") {
  HRFamily fam = hr_family(8, 8);
  fam.mats[3](0, 0) = fam.mats[3](0, 0) == 0 ? 1 : 0;
  CHECK_FALSE(verify_hr(fam));
}

TEST_CASE("hr_to_bilinear", "[bilinear]") {
  BilinearMap id = hr_to_bilinear(hr_family(1, 1), 1);
  CHECK(id == base_nice());

  BilinearMap c = hr_to_bilinear(hr_family(2, 2), 2);
  CHECK(c.a() == 2);
  CHECK(c.b() == 2);
  CHECK(c.c() == 2);
  CHECK(verify_normed(c));

  BilinearMap q = hr_to_bilinear(hr_family(4, 4), 4);
  CHECK(verify_normed(q));
  for (int k = 1; k <= 32; ++k)
    for (int b = 1; b <= radon_hurwitz(k); ++b)
      CHECK(verify_normed(hr_to_bilinear(hr_family(k, radon_hurwitz(k)), b)));
}

TEST_CASE("verify_normed and verify_nice", "[bilinear]") {
  CHECK(verify_normed(base_nice()));
  CHECK(verify_nice(base_nice()));

  BilinearMap c = complex_mult();
  CHECK(verify_normed(c));
  CHECK_FALSE(verify_nice(c));

  BilinearMap two = base_nice();
  two.mats()[0](0, 0) = 2;
  CHECK_FALSE(verify_normed(two));
  CHECK_FALSE(verify_nice(two));
  auto v = find_normed_violation(two);
  REQUIRE(v);
  // symmetrized coefficient: 2 * 2^2 against 2 * 1
  CHECK(v->value == 8);
  CHECK(v->expected == 2);
}

TEST_CASE("swap", "[bilinear]") {
  CHECK(swap(base_nice()) == base_nice());
  BilinearMap g = compose_step(base_nice(), hr_to_bilinear(hr_family(1, 1), 1));
  REQUIRE(g.a() == 2);
  REQUIRE(g.b() == 1);
  BilinearMap s = swap(g);
  CHECK(s.a() == 1);
  CHECK(s.b() == 2);
  CHECK(s.c() == 2);
  CHECK(verify_normed(s));
  CHECK(verify_nice(s));
  CHECK(swap(swap(g)) == g);
  CHECK(swap(swap(complex_mult())) == complex_mult());
}

TEST_CASE("compose_step", "[bilinear]") {
  BilinearMap g = compose_step(base_nice(), hr_to_bilinear(hr_family(1, 1), 1));
  CHECK(g.c() == 2);
  CHECK(verify_normed(g));
  CHECK(verify_nice(g));

  // (0, 3) -> (4, 3)
  std::vector<IntMatrix> unit_rows;
  for (int i = 0; i < 4; ++i) {
    IntMatrix m(1, 4);
    m(0, i) = 1;
    unit_rows.push_back(m);
  }
  BilinearMap zero3(1, 4, 4, unit_rows);
  REQUIRE(verify_nice(zero3));
  REQUIRE(verify_normed(zero3));
  BilinearMap f = compose_step(zero3, hr_to_bilinear(hr_family(4, 4), 4));
  CHECK(f.a() == 5);
  CHECK(f.b() == 4);
  CHECK(f.c() == 8);
  CHECK(verify_normed(f));
  CHECK(verify_nice(f));

  CHECK_THROWS_AS(compose_step(base_nice(), hr_to_bilinear(hr_family(2, 2), 2)), dimension_error);
  CHECK_THROWS_AS(compose_step(complex_mult(), hr_to_bilinear(hr_family(2, 2), 2)), dimension_error);
}

TEST_CASE("BilinearMap shape validation", "[bilinear]") {
  CHECK_THROWS_AS(BilinearMap(0, 1, 1, {}), dimension_error);
  CHECK_THROWS_AS(BilinearMap(1, 1, 2, {IntMatrix(1, 1)}), dimension_error);
  CHECK_THROWS_AS(BilinearMap(1, 1, 1, {IntMatrix(2, 1)}), dimension_error);
}
