#include <random>

#include "catch_amalgamated.hpp"
#include "kosphere/notation.hpp"

using namespace kosphere;

TEST_CASE("printer uses descending degree", "[notation]") {
  KOElement x = KOElement::monomial(KOGenerator::One, -1, 2) + KOElement::eta_squared();
  CHECK(to_string(x) == "2*l^-1 + e2*l^0");
  CHECK(to_string(KOElement{}) == "0");
  CHECK(to_string(-KOElement::alpha()) == "-a*l^0");
  CHECK(to_string(KOElement::one() - KOElement::lambda(2) * KOElement::integer(3)) == "l^0 - 3*l^2");
  CHECK(to_string(KUElement::beta(-1) + KUElement::beta(2, 3)) == "b^-1 + 3*b^2");
  CHECK(to_string(KSpElement{KOElement::integer(2)}) == "2*l^0*th");
  CHECK(to_string(KRElement::sigma_power(1, KOElement::eta())) == "e*l^0*s^1");
}

TEST_CASE("parser normalizes products", "[notation]") {
  CHECK(parse_ko("a*a") == KOElement::monomial(KOGenerator::One, 1, 4));
  CHECK(parse_ko("e*e") == KOElement::eta_squared());
  CHECK(parse_ko("2*e").is_zero());
  CHECK(parse_ko("3 * e") == KOElement::eta());
  CHECK(parse_ko("l") == KOElement::lambda());
  CHECK(parse_ko("th*th") == KOElement::lambda());
  CHECK(parse_ko("-l^0 + l^0").is_zero());
  CHECK(parse_ko("0").is_zero());
  CHECK(std::get<KSpElement>(parse_coefficient("a*l^-1*th")) == quaternionify(KUElement::beta(0)));
  CHECK(std::get<KUElement>(parse_coefficient("b^2 - b^2 + b")) == KUElement::beta(1));
  CHECK(std::get<KRElement>(parse_coefficient("s^-1*e")) == KRElement::sigma_power(-1, KOElement::eta()));
}

TEST_CASE("parser rejects malformed input", "[notation]") {
  CHECK_THROWS_AS(parse_coefficient(""), parse_error);
  CHECK_THROWS_AS(parse_coefficient("x"), parse_error);
  CHECK_THROWS_AS(parse_coefficient("e*b"), parse_error);
  CHECK_THROWS_AS(parse_coefficient("b + l"), parse_error);
  CHECK_THROWS_AS(parse_coefficient("l^"), parse_error);
  CHECK_THROWS_AS(parse_coefficient("2 3"), parse_error);
  CHECK_THROWS_AS(parse_coefficient("th*s"), parse_error);
  CHECK_THROWS_AS(parse_ko("b^1"), parse_error);
}

TEST_CASE("print/parse round trip on random elements", "[notation][property]") {
  std::mt19937_64 rng(17);
  auto coeff = [&] { return Integer(static_cast<long>(rng() % 41) - 20); };
  for (int trial = 0; trial < 300; ++trial) {
    KOElement ko;
    KUElement ku;
    KRElement kr;
    for (int i = 0; i < 4; ++i) {
      KODegree p{static_cast<std::int64_t>(rng() % 49) - 24};
      ko += KOElement::basis(p, coeff());
      ku += KUElement::beta(static_cast<std::int64_t>(rng() % 21) - 10, coeff());
      kr = kr + KRElement::sigma_power(static_cast<std::int64_t>(rng() % 7) - 3, KOElement::basis(p, coeff()));
    }
    CHECK(parse_ko(to_string(ko)) == ko);
    CHECK(parse_ku(to_string(ku)) == ku);
    CHECK(std::get<KSpElement>(parse_coefficient(to_string(KSpElement{ko}) + " + th")) ==
          KSpElement{ko + KOElement::one()});
    if (!kr.is_zero())
      CHECK(std::get<KRElement>(parse_coefficient(to_string(kr))) == kr);
    CHECK(to_string(parse_ko(to_string(ko))) == to_string(ko));
  }
}
