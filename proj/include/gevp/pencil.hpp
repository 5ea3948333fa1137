#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gevp/field.hpp"

namespace gevp {

/// Coupling mask for an order-N pencil: bits in {0,1}^(N-1) plus the prefix
/// sums eta[n] = sum of bits[0..n-1] (eta[0] = 0, length N). bits[n] = 1 puts
/// the coupling e_n on the B side of the pencil, bits[n] = 0 on the A side.
class EpsilonVector {
public:
  EpsilonVector() : eta_(1, 0) {}

  explicit EpsilonVector(std::vector<int> bits) : bits_(std::move(bits)) {
    eta_.reserve(bits_.size() + 1);
    eta_.push_back(0);
    for (int b : bits_) {
      if (b != 0 && b != 1) throw std::invalid_argument("epsilon entries must be 0 or 1");
      eta_.push_back(eta_.back() + static_cast<std::size_t>(b));
    }
  }

  static EpsilonVector ones(std::size_t order) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    return EpsilonVector(std::vector<int>(order - 1, 1));
  }
  static EpsilonVector zeros(std::size_t order) {
    if (order == 0) throw std::invalid_argument("order must be positive");
    return EpsilonVector(std::vector<int>(order - 1, 0));
  }

  std::size_t order() const { return eta_.size(); }
  int bit(std::size_t n) const { return bits_[n]; }
  std::size_t eta(std::size_t n) const { return eta_[n]; }
  std::size_t eta_last() const { return eta_.back(); }
  const std::vector<int>& bits() const { return bits_; }
  bool all_ones() const {
    for (int b : bits_)
      if (b == 0) return false;
    return true;
  }

  friend bool operator==(const EpsilonVector& a, const EpsilonVector& b) { return a.bits_ == b.bits_; }

private:
  std::vector<int> bits_;
  std::vector<std::size_t> eta_;
};

/// Input generalized eigenvalue problem: the pencil
/// (L_eps* R^(M-1)...R^(0), L_eps) of order N with M upper-bidiagonal factors.
template <field_core S>
struct PencilSpec {
  std::size_t order = 0;         // N
  std::size_t factor_count = 1;  // M
  EpsilonVector epsilon;
  std::vector<std::vector<S>> q;  // M rows of N diagonal entries
  std::vector<S> e;               // N-1 subdiagonal couplings

  void validate() const {
    if (order == 0) throw std::invalid_argument("pencil order must be positive");
    if (factor_count == 0) throw std::invalid_argument("factor count must be positive");
    if (epsilon.order() != order) throw std::invalid_argument("epsilon length mismatch");
    if (q.size() != factor_count) throw std::invalid_argument("expected one q row per factor");
    for (const auto& row : q)
      if (row.size() != order) throw std::invalid_argument("q row length mismatch");
    if (e.size() + 1 != order) throw std::invalid_argument("e length mismatch");
  }

  bool all_positive() const {
    for (const auto& row : q)
      for (const auto& v : row)
        if (!is_positive(v)) return false;
    for (const auto& v : e)
      if (!is_positive(v)) return false;
    return true;
  }
};

/// Output of a transformation: the factors of the isospectral tridiagonal
/// (M = 1) or upper-Hessenberg (M > 1) matrix L_hat R_hat^(M-1)...R_hat^(0).
template <field_core S>
struct TransformResult {
  std::size_t order = 0;
  std::size_t factor_count = 1;
  EpsilonVector epsilon;
  std::vector<std::vector<S>> q_hat;  // M rows of N
  std::vector<S> e_hat;               // N-1

  bool all_positive() const {
    for (const auto& row : q_hat)
      for (const auto& v : row)
        if (!is_positive(v)) return false;
    for (const auto& v : e_hat)
      if (!is_positive(v)) return false;
    return true;
  }

  friend bool operator==(const TransformResult& a, const TransformResult& b) {
    return a.order == b.order && a.factor_count == b.factor_count && a.epsilon == b.epsilon &&
           a.q_hat == b.q_hat && a.e_hat == b.e_hat;
  }
};

/// Square dense matrix used by the verification and IO paths only; the
/// transformations themselves never materialize one.
template <typename S>
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t order) : n_(order), a_(order * order, S{}) {}

  static DenseMatrix identity(std::size_t order) {
    DenseMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.at(i, i) = S(1);
    return m;
  }

  std::size_t order() const { return n_; }
  S& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const S& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("order mismatch");
    DenseMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        if (is_zero(x.at(i, k))) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
  std::size_t n_ = 0;
  std::vector<S> a_;
};

// R: the given diagonal with a unit superdiagonal.
template <typename S>
DenseMatrix<S> build_upper_bidiagonal(const std::vector<S>& q) {
  if (q.empty()) throw std::invalid_argument("order must be positive");
  DenseMatrix<S> m(q.size());
  for (std::size_t n = 0; n < q.size(); ++n) {
    m.at(n, n) = q[n];
    if (n + 1 < q.size()) m.at(n, n + 1) = S(1);
  }
  return m;
}

// L_eps: unit lower bidiagonal with subdiagonal -eps_n * e_n.
template <typename S>
DenseMatrix<S> build_L_epsilon(const std::vector<S>& e, const EpsilonVector& eps) {
  if (e.size() + 1 != eps.order()) throw std::invalid_argument("length mismatch");
  DenseMatrix<S> m = DenseMatrix<S>::identity(eps.order());
  for (std::size_t n = 0; n < e.size(); ++n)
    if (eps.bit(n) == 1) m.at(n + 1, n) = -e[n];
  return m;
}

// L_eps*: unit lower bidiagonal with subdiagonal +(1 - eps_n) * e_n.
template <typename S>
DenseMatrix<S> build_L_epsilon_star(const std::vector<S>& e, const EpsilonVector& eps) {
  if (e.size() + 1 != eps.order()) throw std::invalid_argument("length mismatch");
  DenseMatrix<S> m = DenseMatrix<S>::identity(eps.order());
  for (std::size_t n = 0; n < e.size(); ++n)
    if (eps.bit(n) == 0) m.at(n + 1, n) = e[n];
  return m;
}

// L_hat: unit lower bidiagonal carrying +e_hat_n (no sign flip).
template <typename S>
DenseMatrix<S> build_L_hat(const std::vector<S>& e_hat, std::size_t order) {
  if (e_hat.size() + 1 != order) throw std::invalid_argument("length mismatch");
  DenseMatrix<S> m = DenseMatrix<S>::identity(order);
  for (std::size_t n = 0; n < e_hat.size(); ++n) m.at(n + 1, n) = e_hat[n];
  return m;
}

/// Dense (A, B) of the input GEVP: A = L_eps* R^(M-1)...R^(0), B = L_eps.
template <typename S>
std::pair<DenseMatrix<S>, DenseMatrix<S>> assemble_pencil(const PencilSpec<S>& spec) {
  spec.validate();
  DenseMatrix<S> a = build_L_epsilon_star(spec.e, spec.epsilon);
  for (std::size_t j = spec.factor_count; j-- > 0;) a = a * build_upper_bidiagonal(spec.q[j]);
  return {std::move(a), build_L_epsilon(spec.e, spec.epsilon)};
}

/// Dense output matrix: L_hat R_hat^(M-1)...R_hat^(0); tridiagonal for M = 1,
/// upper Hessenberg with bandwidth M otherwise.
template <typename S>
DenseMatrix<S> assemble_result(const TransformResult<S>& result) {
  if (result.q_hat.size() != result.factor_count) throw std::invalid_argument("q_hat row count mismatch");
  DenseMatrix<S> m = build_L_hat(result.e_hat, result.order);
  for (std::size_t j = result.factor_count; j-- > 0;) m = m * build_upper_bidiagonal(result.q_hat[j]);
  return m;
}

}  // namespace gevp
