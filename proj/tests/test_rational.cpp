#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistcat/rational.hpp"
#include "twistcat/rng.hpp"

using namespace twistcat;

TEST_CASE("field arithmetic on simple values") {
  GaussianRational one_plus_i(Rational(1), Rational(1));
  GaussianRational one_minus_i(Rational(1), Rational(-1));
  CHECK(one_plus_i * one_minus_i == gq(2));

  CHECK(GaussianRational::i().inv() == -GaussianRational::i());

  GaussianRational a(Rational(1, 2), Rational(1, 3));
  GaussianRational b(Rational(1, 2), Rational(-1, 3));
  CHECK(a + b == gq(1));
}

TEST_CASE("inverse is a true inverse and zero division is rejected") {
  Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    GaussianRational a = rng.small_gaussian_nonzero(9);
    CHECK(a.inv() * a == gq(1));
  }
  CHECK_THROWS_AS(GaussianRational().inv(), DivisionByZero);
  CHECK_THROWS_AS(gq(1) / GaussianRational(), DivisionByZero);
}

TEST_CASE("exactness properties on random triples") {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    GaussianRational a = rng.small_gaussian(20);
    GaussianRational b = rng.small_gaussian(20);
    GaussianRational c = rng.small_gaussian(20);
    CHECK((a + b) - b == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("string form omits zero parts and unit denominators") {
  CHECK(GaussianRational().str() == "0");
  CHECK(gq(1).str() == "1");
  CHECK((-GaussianRational::i()).str() == "-i");
  CHECK(GaussianRational(Rational(1, 2), Rational(2, 3)).str() == "1/2+2/3i");
  CHECK(GaussianRational(Rational(1), Rational(-1)).str() == "1-i");
  CHECK(GaussianRational(Rational(0), Rational(5, 4)).str() == "5/4i");
}

TEST_CASE("parse round-trips the serialized form") {
  Rng rng(99);
  for (int k = 0; k < 200; ++k) {
    GaussianRational a(Rational(rng.small_int(40), rng.range(1, 12)),
                       Rational(rng.small_int(40), rng.range(1, 12)));
    CHECK(GaussianRational::parse(a.str()) == a);
  }
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-1/2-i") == GaussianRational(Rational(-1, 2), Rational(-1)));
  CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse("x+3"), std::invalid_argument);
}
