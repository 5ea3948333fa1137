#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gevp/field.hpp"

namespace gevp {

/// Dense univariate polynomial over a field, coefficients ascending by
/// degree with trailing zeros trimmed; the zero polynomial stores nothing.
template <typename S>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(S v) { return Polynomial(std::vector<S>{std::move(v)}); }
  static Polynomial one() { return constant(S(1)); }
  static Polynomial x() { return Polynomial(std::vector<S>{S(0), S(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  const S& leading() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  S eval(const S& at) const {
    S acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() < 2) return Polynomial();
    std::vector<S> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * S(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  Polynomial monic() const {
    if (is_zero()) throw std::logic_error("cannot normalize the zero polynomial");
    return *this * (S(1) / leading());
  }

  Polynomial mul_x() const {  // multiply by the variable
    if (is_zero()) return {};
    std::vector<S> r(c_.size() + 1, S(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i];
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-() const {
    std::vector<S> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(-v);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    std::vector<S> r;
    r.reserve(a.c_.size());
    for (const auto& v : a.c_) r.push_back(v * s);
    return Polynomial(std::move(r));
  }

  /// Euclidean division; the divisor must be nonzero.
  friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<S> rem = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<S> quo(a.c_.size() - b.c_.size() + 1, S(0));
    for (int i = a.degree(); i >= db; --i) {
      const S factor = rem[static_cast<std::size_t>(i)] / b.c_.back();
      if (gevp::is_zero(factor)) continue;
      quo[static_cast<std::size_t>(i - db)] = factor;
      for (int j = 0; j <= db; ++j)
        rem[static_cast<std::size_t>(i - db + j)] -= factor * b.c_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
  void trim() {
    while (!c_.empty() && gevp::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<S> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <typename S>
Polynomial<S> gcd_monic(Polynomial<S> a, Polynomial<S> b) {
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

/// Yun's square-free decomposition: returns monic factors with their
/// multiplicities, p = lc * prod factor_i ^ mult_i.
template <typename S>
std::vector<std::pair<Polynomial<S>, int>> squarefree_decompose(const Polynomial<S>& p) {
  std::vector<std::pair<Polynomial<S>, int>> out;
  if (p.degree() < 1) return out;
  const Polynomial<S> f = p.monic();
  const Polynomial<S> fp = f.derivative();
  Polynomial<S> g = gcd_monic(f, fp);
  if (g.degree() == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  Polynomial<S> w = divrem(f, g).first;
  Polynomial<S> y = divrem(fp, g).first;
  Polynomial<S> z = y - w.derivative();
  int mult = 1;
  while (w.degree() > 0) {
    Polynomial<S> a = gcd_monic(w, z);
    if (a.degree() > 0) out.emplace_back(a, mult);
    w = divrem(w, a).first;
    y = divrem(z, a).first;
    z = y - w.derivative();
    ++mult;
  }
  return out;
}

}  // namespace gevp
