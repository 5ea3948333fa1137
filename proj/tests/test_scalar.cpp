#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gevp/field.hpp"
#include "gevp/rational.hpp"

using gevp::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  long n = num(rng);
  if (!allow_zero && n == 0) n = 1;
  return Rational(n, den(rng));
}

}  // namespace

TEST_CASE("parse accepts the literal grammar") {
  CHECK(Rational::parse("620/63").str() == "620/63");
  CHECK(Rational::parse("0").str() == "0");
  CHECK(Rational::parse("-14/21").str() == "-2/3");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("007").str() == "7");
}

TEST_CASE("parse rejects malformed literals") {
  CHECK_THROWS_AS(Rational::parse("-14/-21"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse(""), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("-"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("/3"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse(" 1"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("+1"), gevp::ParseError);
  CHECK_THROWS_AS(Rational::parse("3/0"), gevp::ZeroDenominator);
}

TEST_CASE("arithmetic is exact and reduced") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(6) * Rational(9) / Rational(7) == Rational(54, 7));
  CHECK((Rational(4, 6)).str() == "2/3");
  CHECK_THROWS_AS(Rational(1) / Rational(0), gevp::DivisionByZero);
}

TEST_CASE("reduction invariant holds after every operation") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng, /*allow_zero=*/false);
    for (const Rational& r : {a + b, a - b, a * b, a / b, -a}) {
      // Reduced form, checked by gcd on the raw parts.
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.raw().get_den() > 0);
      // Round-tripping the canonical text form is lossless.
      CHECK(Rational::parse(r.str()) == r);
    }
  }
}

TEST_CASE("field axioms sampled on random rationals") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    const Rational nz = random_rational(rng, /*allow_zero=*/false);
    CHECK(nz / nz == Rational(1));
    CHECK(nz * (Rational(1) / nz) == Rational(1));
  }
}

TEST_CASE("canonical text form") {
  CHECK(Rational(8, 2).str() == "4");       // never prints "/1"
  CHECK(Rational(-3, 9).str() == "-1/3");   // sign on the numerator
  CHECK(Rational(0, 5).str() == "0");
}

TEST_CASE("round-to-nearest double conversion") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  // 2^60 + 1 rounds to 2^60 under round-to-nearest.
  const Rational big = Rational::parse("1152921504606846977");
  CHECK(big.to_double() == 1152921504606846976.0);
  CHECK(Rational::from_double(0.625) == Rational(5, 8));
}

TEST_CASE("ordering is the usual one on Q") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(gevp::abs(Rational(-7, 3)) == Rational(7, 3));
  CHECK(gevp::is_positive(Rational(2, 9)));
  CHECK(!gevp::is_positive(Rational(0)));
}
