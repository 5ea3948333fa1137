#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gevp/pencil.hpp"
#include "gevp/polynomial.hpp"
#include "gevp/rational.hpp"
#include "gevp/transform.hpp"

// Reconstruction of the monic polynomial families attached to a trajectory
// and coefficientwise verification of the recurrence identities they satisfy.
// This layer is the deep correctness evidence beyond plain isospectrality.

namespace gevp {

struct InsufficientTrajectory : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Table of monic polynomials p[k][n], 0 <= n <= usable degree at level k.
/// p[k][0] = 1 always; degree(p[k][n]) = n.
class PolyFamily {
public:
  std::size_t order = 0;  // N
  std::vector<std::vector<Polynomial<Rational>>> table;

  bool has(std::size_t k, std::size_t n) const {
    return k < table.size() && n < table[k].size();
  }
  const Polynomial<Rational>& at(std::size_t k, std::size_t n) const {
    if (!has(k, n))
      throw InsufficientTrajectory("family entry (k=" + std::to_string(k) +
                                   ", n=" + std::to_string(n) + ") not computable");
    return table[k][n];
  }
};

/// Single-factor family, built directly by the masked three-term recurrence
/// at every level the trajectory covers.
PolyFamily build_family_m1(const Trajectory<Rational>& t, const EpsilonVector& eps);

/// General family, built inductively from p[k][0] = 1 by
/// p[k][n+1] = x * p[k+1][n] - q[k][n] * p[k][n]; the usable k range shrinks
/// by one per degree step.
PolyFamily build_family_general(const Trajectory<Rational>& t);

struct IdentityCheck {
  std::string name;
  std::size_t points = 0;  // (k, n) pairs actually compared
  bool pass = true;
  std::size_t fail_k = 0;
  std::size_t fail_n = 0;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Checks, as exact polynomial identities over every available (k, n):
/// the Geronimus-type relation, the Christoffel-type relation, the d-form
/// relation, the periodicity of p_N, and (single-factor runs) the merged
/// three-term relation.
IdentityReport check_identities(const PolyFamily& family, const Trajectory<Rational>& t);

/// As above plus the vector relations against the assembled output:
/// x p_hat^(k+1) = R_hat^(k) p_hat^(k) + p_N^(k), and for single-factor runs
/// T_hat p_hat + p_N = x p_hat.
IdentityReport check_identities(const PolyFamily& family, const Trajectory<Rational>& t,
                                const TransformResult<Rational>& result);

}  // namespace gevp
