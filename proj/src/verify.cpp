#include "gevp/verify.hpp"

#include <algorithm>
#include <cassert>

namespace gevp {

namespace {

// Newton interpolation on the integer nodes 0..count-1.
Polynomial<Rational> interpolate_at_integers(std::vector<Rational> values) {
  const std::size_t count = values.size();
  for (std::size_t j = 1; j < count; ++j)
    for (std::size_t i = count; i-- > j;)
      values[i] = (values[i] - values[i - 1]) / Rational(static_cast<long>(j));
  Polynomial<Rational> p = Polynomial<Rational>::constant(values[count - 1]);
  for (std::size_t i = count - 1; i-- > 0;) {
    // p <- p * (x - i) + dd_i
    const Polynomial<Rational> node(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)});
    p = p * node + Polynomial<Rational>::constant(values[i]);
  }
  return p;
}

}  // namespace

Polynomial<Rational> charpoly(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& b) {
  if (a.order() != b.order()) throw std::invalid_argument("pencil order mismatch");
  const std::size_t n = a.order();
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (std::size_t node = 0; node <= n; ++node) {
    DenseMatrix<Rational> m(n);
    const Rational lambda(static_cast<long>(node));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j) - lambda * b.at(i, j);
    values.push_back(determinant(std::move(m)));
  }
  const Polynomial<Rational> p = interpolate_at_integers(std::move(values));
  if (p.is_zero()) throw std::invalid_argument("pencil is identically singular");
  return p.monic();
}

Polynomial<Rational> charpoly(const DenseMatrix<Rational>& a) {
  return charpoly(a, DenseMatrix<Rational>::identity(a.order()));
}

MomentSequence moments_from_tridiagonal(const DenseMatrix<Rational>& t, std::size_t count,
                                        long start) {
  const std::size_t n = t.order();
  MomentSequence ms;
  ms.start = start;
  ms.mu.reserve(count);
  std::vector<Rational> v(n, Rational(0));
  if (n > 0) v[0] = Rational(1);  // e_0
  for (std::size_t m = 0; m < count; ++m) {
    ms.mu.push_back(n > 0 ? v[0] : Rational(0));
    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r) {
        if (t.at(r, i).is_zero()) continue;
        w[r] += t.at(r, i) * v[i];
      }
    }
    v = std::move(w);
  }
  return ms;
}

Rational tau(const MomentSequence& ms, std::size_t n, long k, std::size_t factor_count) {
  if (n == 0) return Rational(1);
  DenseMatrix<Rational> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.at(i, j) = ms.at(k + static_cast<long>(i * factor_count) + static_cast<long>(j));
  return determinant(std::move(h));
}

TauReport check_tau_formulas(const TransformResult<Rational>& result) {
  if (result.factor_count != 1)
    throw std::invalid_argument("tau oracle is defined for single-factor results only");
  const std::size_t n_order = result.order;
  const DenseMatrix<Rational> t = assemble_result(result);
  const MomentSequence ms = moments_from_tridiagonal(t, 2 * n_order, /*start=*/1);

  // tau tables at time offsets 1 and 2 relative to the output level; the
  // deepest entry tau_N^(2) consumes the last held moment mu_(2N).
  std::vector<Rational> tau1(n_order + 1), tau2(n_order + 1);
  for (std::size_t n = 0; n <= n_order; ++n) {
    tau1[n] = tau(ms, n, 1, 1);
    tau2[n] = tau(ms, n, 2, 1);
  }

  TauReport report;
  for (std::size_t n = 0; n < n_order; ++n) {
    const Rational den = tau2[n] * tau1[n + 1];
    if (den.is_zero()) throw TauBreakdown("vanishing tau at n = " + std::to_string(n));
    const Rational want = tau1[n] * tau2[n + 1] / den;
    report.checks.push_back({"q_hat[" + std::to_string(n) + "]", result.q_hat[0][n] == want});
  }
  for (std::size_t n = 0; n + 1 < n_order; ++n) {
    const Rational den = tau1[n + 1] * tau2[n + 1];
    if (den.is_zero()) throw TauBreakdown("vanishing tau at n = " + std::to_string(n));
    const Rational want = tau2[n] * tau1[n + 2] / den;
    report.checks.push_back({"e_hat[" + std::to_string(n) + "]", result.e_hat[n] == want});
  }
  return report;
}

namespace {

using Poly = Polynomial<Rational>;

int sign_of(const Rational& r) { return r.sign(); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    const Poly rem = divrem(chain[chain.size() - 2], chain.back()).second;
    if (rem.is_zero()) break;
    // Scale by a positive constant to tame coefficient growth; signs are
    // unaffected.
    chain.push_back(-(rem * (Rational(1) / abs(rem.leading()))));
  }
  return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

Rational cauchy_bound(const Poly& p) {
  const Rational lead = abs(p.leading());
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    const Rational v = abs(p.coeff(static_cast<std::size_t>(i))) / lead;
    if (v > m) m = v;
  }
  return m + Rational(1);
}

// Split point strictly inside (lo, hi) at which p does not vanish.
Rational pick_split(const Poly& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / Rational(2);
  Rational gap = (hi - mid) / Rational(2);
  for (int tries = 0; tries < 200; ++tries) {
    if (!p.eval(mid).is_zero()) return mid;
    mid = mid + gap;
    gap = gap / Rational(2);
  }
  throw std::logic_error("could not find a root-free split point");
}

void isolate(const Poly& p, const std::vector<Poly>& chain, const Rational& lo, int vlo,
             const Rational& hi, int vhi, std::vector<std::pair<Rational, Rational>>& out) {
  const int count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = pick_split(p, lo, hi);
  const int vmid = sign_changes(chain, mid);
  isolate(p, chain, lo, vlo, mid, vmid, out);
  isolate(p, chain, mid, vmid, hi, vhi, out);
}

// Shrink an isolating bracket (exactly one simple root, endpoints non-roots)
// to width <= tol; an exact hit collapses the bracket.
std::pair<Rational, Rational> refine(const Poly& p, Rational lo, Rational hi, const Rational& tol) {
  int slo = sign_of(p.eval(lo));
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / Rational(2);
    const int smid = sign_of(p.eval(mid));
    if (smid == 0) return {mid, mid};
    if (smid != slo)
      hi = mid;
    else
      lo = mid;
  }
  return {std::move(lo), std::move(hi)};
}

}  // namespace

RootReport real_roots(const Polynomial<Rational>& p, double tol) {
  RootReport report;
  if (p.degree() < 1) return report;
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const Rational rtol = Rational::from_double(tol);

  for (const auto& [factor, multiplicity] : squarefree_decompose(p)) {
    const std::vector<Poly> chain = sturm_chain(factor);
    const Rational bound = cauchy_bound(factor);
    const Rational lo = -bound;
    const Rational hi = bound;
    std::vector<std::pair<Rational, Rational>> brackets;
    isolate(factor, chain, lo, sign_changes(chain, lo), hi, sign_changes(chain, hi), brackets);
    report.complex_count += (factor.degree() - static_cast<int>(brackets.size())) * multiplicity;
    for (auto& [blo, bhi] : brackets) {
      auto [rlo, rhi] = refine(factor, std::move(blo), std::move(bhi), rtol);
      RealRoot root;
      root.value = ((rlo + rhi) / Rational(2)).to_double();
      root.multiplicity = multiplicity;
      root.lo = std::move(rlo);
      root.hi = std::move(rhi);
      report.roots.push_back(std::move(root));
    }
  }
  std::sort(report.roots.begin(), report.roots.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return report;
}

IsospectralReport verify_isospectral(const PencilSpec<Rational>& spec,
                                     const TransformResult<Rational>& result, bool want_roots,
                                     double tol) {
  IsospectralReport report;
  const auto [a, b] = assemble_pencil(spec);
  report.pencil_charpoly = charpoly(a, b);
  report.result_charpoly = charpoly(assemble_result(result));
  report.equal = report.pencil_charpoly == report.result_charpoly;
  if (want_roots) report.roots = real_roots(report.pencil_charpoly, tol);
  return report;
}

}  // namespace gevp
