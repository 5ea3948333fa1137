#include "gevp/polyseq.hpp"

#include <algorithm>

namespace gevp {

namespace {

using Poly = Polynomial<Rational>;

Poly linear(const Rational& root_free_coeff) {
  // x + c as a polynomial
  return Poly(std::vector<Rational>{root_free_coeff, Rational(1)});
}

// Mask value at position n with the right-edge convention eps_(N-1) := 0
// (there is no coupling past the last row; f there is just q).
int eps_at(const Trajectory<Rational>& t, std::size_t n) {
  return n + 1 < t.order ? t.epsilon.bit(n) : 0;
}

void record(IdentityCheck& c, bool ok, std::size_t k, std::size_t n) {
  ++c.points;
  if (!ok && c.pass) {
    c.pass = false;
    c.fail_k = k;
    c.fail_n = n;
  }
}

}  // namespace

PolyFamily build_family_m1(const Trajectory<Rational>& t, const EpsilonVector& eps) {
  if (t.factor_count != 1)
    throw std::invalid_argument("direct three-term construction applies to single-factor runs");
  if (eps.order() != t.order) throw std::invalid_argument("epsilon length mismatch");

  PolyFamily fam;
  fam.order = t.order;
  const std::size_t levels = std::min(t.q.size(), t.e.size());
  fam.table.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    auto& row = fam.table[k];
    row.reserve(t.order + 1);
    row.push_back(Poly::one());
    row.push_back(linear(-t.q[k][0]));  // p_1 = x - q_0 (e_{-1} = 0)
    for (std::size_t n = 1; n < t.order; ++n) {
      const int b = eps.bit(n - 1);
      const Rational& en1 = t.e[k][n - 1];
      Poly lead = linear(b == 0 ? -t.q[k][n] - en1 : -t.q[k][n]);
      Poly tail = b == 1 ? (Poly::x() * en1) : Poly::constant(t.q[k][n - 1] * en1);
      row.push_back(lead * row[n] - tail * row[n - 1]);
    }
  }
  return fam;
}

PolyFamily build_family_general(const Trajectory<Rational>& t) {
  PolyFamily fam;
  fam.order = t.order;
  if (t.q.empty()) return fam;
  const std::size_t top = t.q.size() - 1;
  fam.table.assign(top + 1, {Poly::one()});
  for (std::size_t n = 0; n < t.order; ++n) {
    for (std::size_t k = 0; k + n < top; ++k) {
      if (!fam.has(k + 1, n) || !fam.has(k, n)) break;
      fam.table[k].push_back(fam.table[k + 1][n].mul_x() - fam.table[k][n] * t.q[k][n]);
    }
  }
  return fam;
}

IdentityReport check_identities(const PolyFamily& fam, const Trajectory<Rational>& t) {
  const std::size_t n_order = t.order;
  const std::size_t m = t.factor_count;
  IdentityReport report;

  // Christoffel-type: x p_n^(k+1) = p_(n+1)^(k + eps_n M) + f_n^(k) p_n^(k).
  {
    IdentityCheck c{"christoffel", 0, true, 0, 0};
    for (std::size_t k = 0; k < t.f.size(); ++k)
      for (std::size_t n = 0; n < n_order; ++n) {
        const std::size_t up = k + static_cast<std::size_t>(eps_at(t, n)) * m;
        if (!fam.has(k + 1, n) || !fam.has(k, n) || !fam.has(up, n + 1)) continue;
        const Poly lhs = fam.at(k + 1, n).mul_x();
        const Poly rhs = fam.at(up, n + 1) + fam.at(k, n) * t.f[k][n];
        record(c, lhs == rhs, k, n);
      }
    report.checks.push_back(std::move(c));
  }

  // Geronimus-type: p_n^(k) = p_n^(k+M) + e_(n-1)^(k) p_(n-1)^(k + (1-eps_(n-1)) M).
  {
    IdentityCheck c{"geronimus", 0, true, 0, 0};
    for (std::size_t k = 0; k < t.e.size(); ++k)
      for (std::size_t n = 1; n < n_order; ++n) {
        const std::size_t mid = k + static_cast<std::size_t>(1 - t.epsilon.bit(n - 1)) * m;
        if (!fam.has(k, n) || !fam.has(k + m, n) || !fam.has(mid, n - 1)) continue;
        const Poly rhs = fam.at(k + m, n) + fam.at(mid, n - 1) * t.e[k][n - 1];
        record(c, fam.at(k, n) == rhs, k, n);
      }
    report.checks.push_back(std::move(c));
  }

  // d-form: x p_n^(k+1) = p_(n+1)^(k + (eps_n - 1) M) + d_n^(k) p_n^(k),
  // over the stored d rows (levels >= M).
  {
    IdentityCheck c{"d-form", 0, true, 0, 0};
    for (std::size_t k = m; k < t.d.size(); ++k) {
      if (t.d[k].empty()) continue;
      for (std::size_t n = 0; n < n_order; ++n) {
        const std::size_t down = k + static_cast<std::size_t>(eps_at(t, n)) * m - m;
        if (!fam.has(k + 1, n) || !fam.has(k, n) || !fam.has(down, n + 1)) continue;
        const Poly lhs = fam.at(k + 1, n).mul_x();
        const Poly rhs = fam.at(down, n + 1) + fam.at(k, n) * t.d[k][n];
        record(c, lhs == rhs, k, n);
      }
    }
    report.checks.push_back(std::move(c));
  }

  // Periodicity of the terminating polynomial: p_N^(k+M) = p_N^(k).
  {
    IdentityCheck c{"p_N periodicity", 0, true, 0, 0};
    for (std::size_t k = 0; fam.has(k + m, n_order); ++k) {
      if (!fam.has(k, n_order)) break;
      record(c, fam.at(k, n_order) == fam.at(k + m, n_order), k, n_order);
    }
    report.checks.push_back(std::move(c));
  }

  // Merged three-term relation (single-factor runs): x p_n^(k) =
  // p_(n+1)^(k+eps_n) + (f_n^(k) + e_(n-1)^(k)) p_n^(k)
  //   + f_(n-1)^(k-eps_(n-1)) e_(n-1)^(k) p_(n-1)^(k-eps_(n-1)).
  if (m == 1) {
    IdentityCheck c{"merged three-term", 0, true, 0, 0};
    for (std::size_t k = 0; k < t.f.size() && k < t.e.size(); ++k)
      for (std::size_t n = 1; n < n_order; ++n) {
        const std::size_t b = static_cast<std::size_t>(t.epsilon.bit(n - 1));
        if (k < b) continue;
        const std::size_t up = k + static_cast<std::size_t>(eps_at(t, n));
        if (!fam.has(k, n) || !fam.has(up, n + 1) || !fam.has(k - b, n - 1)) continue;
        if (k - b >= t.f.size()) continue;
        const Rational& en1 = t.e[k][n - 1];
        const Poly lhs = fam.at(k, n).mul_x();
        const Poly rhs = fam.at(up, n + 1) + fam.at(k, n) * (t.f[k][n] + en1) +
                         fam.at(k - b, n - 1) * (t.f[k - b][n - 1] * en1);
        record(c, lhs == rhs, k, n);
      }
    report.checks.push_back(std::move(c));
  }

  return report;
}

IdentityReport check_identities(const PolyFamily& fam, const Trajectory<Rational>& t,
                                const TransformResult<Rational>& result) {
  IdentityReport report = check_identities(fam, t);
  const std::size_t n_order = t.order;
  const std::size_t m = t.factor_count;
  const auto& eps = t.epsilon;

  // Hatted vector relation: x p_hat^(k+1) = R_hat^(k) p_hat^(k) + p_N^(k),
  // reading R_hat^(k) off the trajectory (q_hat_n^(k) = f_n^(k + eta_n M)).
  {
    IdentityCheck c{"x p_hat = R_hat p_hat + p_N", 0, true, 0, 0};
    for (std::size_t k = 0;; ++k) {
      bool any = false;
      for (std::size_t n = 0; n < n_order; ++n) {
        const std::size_t lvl = k + eps.eta(n) * m;
        if (lvl >= t.f.size() || !fam.has(lvl + 1, n) || !fam.has(lvl, n)) continue;
        Poly rhs_tail;
        if (n + 1 < n_order) {
          const std::size_t up = k + eps.eta(n + 1) * m;
          if (!fam.has(up, n + 1)) continue;
          rhs_tail = fam.at(up, n + 1);
        } else {
          // p_N at level k, folded down by periodicity when k itself is not
          // covered (checked separately above).
          std::size_t pk = k;
          while (!fam.has(pk, n_order) && pk >= m) pk -= m;
          if (!fam.has(pk, n_order)) continue;
          rhs_tail = fam.at(pk, n_order);
        }
        const Poly lhs = fam.at(lvl + 1, n).mul_x();
        const Poly rhs = rhs_tail + fam.at(lvl, n) * t.f[lvl][n];
        record(c, lhs == rhs, k, n);
        any = true;
      }
      if (!any) break;
    }
    report.checks.push_back(std::move(c));
  }

  // Tridiagonal vector relation (single-factor runs):
  // T_hat p_hat + p_N = x p_hat with p_hat_n = p_n^(eta_n).
  if (m == 1 && result.factor_count == 1) {
    IdentityCheck c{"T_hat p_hat + p_N = x p_hat", 0, true, 0, 0};
    bool available = fam.has(0, n_order);
    for (std::size_t n = 0; n < n_order && available; ++n)
      if (!fam.has(eps.eta(n), n)) available = false;
    if (available) {
      const DenseMatrix<Rational> that = assemble_result(result);
      std::vector<Poly> phat;
      phat.reserve(n_order);
      for (std::size_t n = 0; n < n_order; ++n) phat.push_back(fam.at(eps.eta(n), n));
      const Poly pn = fam.at(0, n_order);
      for (std::size_t row = 0; row < n_order; ++row) {
        Poly lhs;
        for (std::size_t j = 0; j < n_order; ++j) {
          if (that.at(row, j).is_zero()) continue;
          lhs = lhs + phat[j] * that.at(row, j);
        }
        if (row + 1 == n_order) lhs = lhs + pn;
        record(c, lhs == phat[row].mul_x(), 0, row);
      }
    }
    report.checks.push_back(std::move(c));
  }

  return report;
}

}  // namespace gevp
