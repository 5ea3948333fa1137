#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace gevp {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroDenominator : ParseError {
  ZeroDenominator() : ParseError("rational literal with zero denominator") {}
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

enum class ScalarMode { exact, f64 };

/// Arbitrary-precision rational, kept reduced with a positive denominator;
/// zero is stored as 0/1. Literal grammar is `-?digits` or `-?digits/digits`
/// with an unsigned, nonzero denominator; canonical text form is `n` when the
/// denominator is 1 and `n/d` otherwise.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, long den);

  static Rational parse(std::string_view text);
  static Rational from_double(double x);  // exact binary expansion of x

  std::string str() const;
  double to_double() const;  // round-to-nearest binary64

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero{};
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_positive(const Rational& r) { return r.sign() > 0; }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace gevp
