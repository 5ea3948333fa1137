#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gevp/pencil.hpp"
#include "gevp/polynomial.hpp"
#include "gevp/rational.hpp"

// Independent exact oracles used to certify transformation outputs:
// characteristic polynomials of pencils, moment/Hankel-determinant closed
// forms, and certified real-root extraction.

namespace gevp {

struct MissingMoments : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TauBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact determinant by Gaussian elimination with row pivoting.
template <typename S>
S determinant(DenseMatrix<S> m) {
  const std::size_t n = m.order();
  S det(1);
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && is_zero(m.at(pivot, c))) ++pivot;
    if (pivot == n) return S(0);
    if (pivot != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      negate = !negate;
    }
    det = det * m.at(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m.at(r, c))) continue;
      const S factor = m.at(r, c) / m.at(c, c);
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return negate ? -det : det;
}

/// Monic characteristic polynomial of the pencil (A, B): det(A - x B) up to
/// normalization, computed by exact evaluation at the integer nodes 0..N and
/// Newton interpolation.
Polynomial<Rational> charpoly(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b);

/// Standard characteristic polynomial det(A - x I), monic.
Polynomial<Rational> charpoly(const DenseMatrix<Rational>& a);

/// Moments mu_m = L[x^(m - start)] of the functional realized by a matrix:
/// mu_(start + m) = e_0^T T^m e_0.
struct MomentSequence {
  long start = 1;
  std::vector<Rational> mu;

  const Rational& at(long index) const {
    if (index < start || index >= start + static_cast<long>(mu.size()))
      throw MissingMoments("moment index " + std::to_string(index) + " not held");
    return mu[static_cast<std::size_t>(index - start)];
  }
};

MomentSequence moments_from_tridiagonal(const DenseMatrix<Rational>& t, std::size_t count,
                                        long start = 1);

/// (Block-)Hankel determinant tau_n^(k) = det [ mu_(k + i*M + j) ]_(i,j < n).
Rational tau(const MomentSequence& ms, std::size_t n, long k, std::size_t factor_count);

struct TauCheck {
  std::string name;
  bool pass = false;
};

struct TauReport {
  std::vector<TauCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Verifies a single-factor result against the Hankel-ratio closed forms
/// computed from the moments of its own output matrix.
TauReport check_tau_formulas(const TransformResult<Rational>& result);

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
  Rational lo, hi;  // exact isolating bracket, lo <= root <= hi
};

struct RootReport {
  std::vector<RealRoot> roots;  // ascending
  int complex_count = 0;        // non-real roots, counted with multiplicity
  bool all_real_simple() const {
    if (complex_count != 0) return false;
    for (const auto& r : roots)
      if (r.multiplicity != 1) return false;
    return true;
  }
};

/// Isolates every real root with Sturm sequences on a Cauchy bound interval,
/// then bisects each bracket to width <= tol. Multiplicities come from the
/// square-free decomposition; non-real content is reported, never raised.
RootReport real_roots(const Polynomial<Rational>& p, double tol = 1e-10);

struct IsospectralReport {
  Polynomial<Rational> pencil_charpoly;
  Polynomial<Rational> result_charpoly;
  bool equal = false;
  std::optional<RootReport> roots;
};

IsospectralReport verify_isospectral(const PencilSpec<Rational>& spec,
                                     const TransformResult<Rational>& result,
                                     bool want_roots = false, double tol = 1e-10);

}  // namespace gevp
