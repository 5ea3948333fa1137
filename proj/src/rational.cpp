#include "gevp/rational.hpp"

#include <cctype>

#include <mpfr.h>

namespace gevp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw ZeroDenominator{};
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  const auto slash = rest.find('/');
  std::string_view num_part = rest.substr(0, slash);
  if (!all_digits(num_part)) throw ParseError("malformed rational literal: '" + std::string(text) + "'");

  mpz_class num(std::string(num_part), 10);
  mpz_class den(1);
  if (slash != std::string_view::npos) {
    std::string_view den_part = rest.substr(slash + 1);
    if (!all_digits(den_part)) throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    den = mpz_class(std::string(den_part), 10);
    if (den == 0) throw ZeroDenominator{};
  }
  if (negative) num = -num;

  mpq_class v(num, den);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::from_double(double x) {
  return Rational(mpq_class(x));  // exact: binary64 values are dyadic rationals
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

double Rational::to_double() const {
  // mpq_get_d truncates; go through MPFR for correct round-to-nearest.
  mpfr_t t;
  mpfr_init2(t, 53);
  mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
  const double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

}  // namespace gevp
