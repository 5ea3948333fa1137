#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gevp/field.hpp"
#include "gevp/pencil.hpp"

// The three isospectral transformation kernels. Each one is coded from its
// own update system; the pairwise agreement of their outputs is a tested
// property, not a shared code path. Everything in this file is written
// against the additive/multiplicative subset of the scalar contract: no
// subtraction, no negation, not even on loop indices. The verification suite
// scans this file to confirm that.

namespace gevp {

/// Zero divisor hit while evolving a Toda system; carries the time level k,
/// the position n and the name of the vanished divisor.
struct BreakdownError : std::runtime_error {
  std::size_t level;
  std::size_t position;
  std::string divisor;

  BreakdownError(std::size_t k, std::size_t n, std::string which)
      : std::runtime_error("breakdown: divisor " + which + " vanished at (k=" + std::to_string(k) +
                           ", n=" + std::to_string(n) + ")"),
        level(k),
        position(n),
        divisor(std::move(which)) {}
};

/// Full (k, n) table of a Toda evolution, row index = time level k.
/// Each step appends one row to every table: f at the level just read,
/// q and d at M levels above it, e one level above it. d rows below level M
/// stay empty.
template <field_core S>
struct Trajectory {
  std::size_t order = 0;         // N
  std::size_t factor_count = 1;  // M
  EpsilonVector epsilon;
  std::vector<std::vector<S>> q;
  std::vector<std::vector<S>> e;
  std::vector<std::vector<S>> f;
  std::vector<std::vector<S>> d;
};

template <field_core S>
struct TodaRun {
  TransformResult<S> result;
  Trajectory<S> trajectory;
};

/// Discrete relativistic Toda evolution: step k reads level k and writes
///   f_n = q_n + e_n (f at the right edge is just q),
///   q'_0 = f_0,  q'_(n+1) = q_n f_(n+1) / f_n,  e'_n = e_n f_(n+1) / f_n.
template <field_core S>
Trajectory<S> evolve_relativistic(const std::vector<S>& q_init, const std::vector<S>& e_init,
                                  std::size_t steps) {
  const std::size_t order = q_init.size();
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (e_init.size() + 1 != order) throw std::invalid_argument("subdiagonal length must be order minus one");

  Trajectory<S> t;
  t.order = order;
  t.factor_count = 1;
  t.epsilon = EpsilonVector::ones(order);
  t.q.push_back(q_init);
  t.e.push_back(e_init);
  t.d.emplace_back();  // d rows start at level 1

  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<S> fk;
    std::vector<S> q_next;
    std::vector<S> e_next;
    fk.reserve(order);
    q_next.reserve(order);
    e_next.reserve(order);
    {
      const std::vector<S>& qk = t.q[k];
      const std::vector<S>& ek = t.e[k];
      for (std::size_t n = 0; n < order; ++n) {
        if (n + 1 < order)
          fk.push_back(qk[n] + ek[n]);
        else
          fk.push_back(qk[n]);
      }
      q_next.push_back(fk[0]);
      for (std::size_t m = 0; m + 1 < order; ++m) {
        if (is_zero(fk[m])) throw BreakdownError(k, m, "f");
        q_next.push_back(qk[m] * fk[m + 1] / fk[m]);
        e_next.push_back(ek[m] * fk[m + 1] / fk[m]);
      }
    }
    t.f.push_back(std::move(fk));
    t.d.push_back(q_next);  // under the full mask, d coincides with q levelwise
    t.q.push_back(std::move(q_next));
    t.e.push_back(std::move(e_next));
  }
  return t;
}

/// Discrete elementary Toda evolution: step k reads level k and writes
/// f at k, d and q at k + 1, e at k + 1. The d, q, e updates advance
/// together: position n needs the fresh values at n and the fresh e at the
/// previous position.
template <field_core S>
Trajectory<S> evolve_elementary(const std::vector<S>& q_init, const std::vector<S>& e_init,
                                const EpsilonVector& eps, std::size_t steps) {
  const std::size_t order = q_init.size();
  if (order == 0) throw std::invalid_argument("order must be positive");
  if (e_init.size() + 1 != order) throw std::invalid_argument("subdiagonal length must be order minus one");
  if (eps.order() != order) throw std::invalid_argument("epsilon length mismatch");

  Trajectory<S> t;
  t.order = order;
  t.factor_count = 1;
  t.epsilon = eps;
  t.q.push_back(q_init);
  t.e.push_back(e_init);
  t.d.emplace_back();  // d rows start at level 1

  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<S> fk;
    std::vector<S> d_next;
    std::vector<S> q_next;
    std::vector<S> e_next;
    fk.reserve(order);
    d_next.reserve(order);
    q_next.reserve(order);
    e_next.reserve(order);
    {
      const std::vector<S>& qk = t.q[k];
      const std::vector<S>& ek = t.e[k];
      for (std::size_t n = 0; n < order; ++n) {
        if (n + 1 < order && eps.bit(n) == 1)
          fk.push_back(qk[n] + ek[n]);
        else
          fk.push_back(qk[n]);
      }
      d_next.push_back(fk[0]);
      if (order > 1 && eps.bit(0) == 0)
        q_next.push_back(d_next[0] + ek[0]);
      else
        q_next.push_back(d_next[0]);
      if (order > 1) {
        if (is_zero(q_next[0])) throw BreakdownError(k, 0, "q+e");
        e_next.push_back(ek[0] * fk[1] / q_next[0]);
      }
      for (std::size_t m = 0; m + 1 < order; ++m) {
        const std::size_t n = m + 1;
        if (eps.bit(m) == 0) {
          if (is_zero(q_next[m])) throw BreakdownError(k, m, "q");
          d_next.push_back(d_next[m] * fk[n] / q_next[m]);
        } else {
          if (is_zero(fk[m])) throw BreakdownError(k, m, "f");
          d_next.push_back(qk[m] * fk[n] / fk[m]);
        }
        if (n + 1 < order && eps.bit(n) == 0)
          q_next.push_back(d_next[n] + ek[n]);
        else
          q_next.push_back(d_next[n]);
        if (n + 1 < order) {
          S denom = q_next[n];
          if (eps.bit(n) == 1) denom = denom + e_next[m];
          if (is_zero(denom)) throw BreakdownError(k, n, "q+e");
          e_next.push_back(ek[n] * fk[n + 1] / denom);
        }
      }
    }
    t.f.push_back(std::move(fk));
    t.d.push_back(std::move(d_next));
    t.q.push_back(std::move(q_next));
    t.e.push_back(std::move(e_next));
  }
  return t;
}

/// Discrete hungry elementary Toda evolution: step k reads level k and
/// writes f at k, d and q at k + M, e at k + 1.
template <field_core S>
Trajectory<S> evolve_hungry(const PencilSpec<S>& spec, std::size_t steps) {
  spec.validate();
  const std::size_t order = spec.order;
  const std::size_t factors = spec.factor_count;
  const EpsilonVector& eps = spec.epsilon;

  Trajectory<S> t;
  t.order = order;
  t.factor_count = factors;
  t.epsilon = eps;
  for (const auto& row : spec.q) t.q.push_back(row);
  t.e.push_back(spec.e);
  for (std::size_t j = 0; j < factors; ++j) t.d.emplace_back();  // d rows start at level M

  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<S> fk;
    std::vector<S> d_next;  // level k + M
    std::vector<S> q_next;  // level k + M
    std::vector<S> e_next;  // level k + 1
    fk.reserve(order);
    d_next.reserve(order);
    q_next.reserve(order);
    e_next.reserve(order);
    {
      const std::vector<S>& qk = t.q[k];
      const std::vector<S>& ek = t.e[k];
      for (std::size_t n = 0; n < order; ++n) {
        if (n + 1 < order && eps.bit(n) == 1)
          fk.push_back(qk[n] + ek[n]);
        else
          fk.push_back(qk[n]);
      }
      d_next.push_back(fk[0]);
      if (order > 1 && eps.bit(0) == 0)
        q_next.push_back(d_next[0] + ek[0]);
      else
        q_next.push_back(d_next[0]);
      if (order > 1) {
        if (is_zero(q_next[0])) throw BreakdownError(k, 0, "q+e");
        e_next.push_back(ek[0] * fk[1] / q_next[0]);
      }
      for (std::size_t m = 0; m + 1 < order; ++m) {
        const std::size_t n = m + 1;
        if (eps.bit(m) == 0) {
          if (is_zero(q_next[m])) throw BreakdownError(k, m, "q");
          d_next.push_back(d_next[m] * fk[n] / q_next[m]);
        } else {
          if (is_zero(fk[m])) throw BreakdownError(k, m, "f");
          d_next.push_back(qk[m] * fk[n] / fk[m]);
        }
        if (n + 1 < order && eps.bit(n) == 0)
          q_next.push_back(d_next[n] + ek[n]);
        else
          q_next.push_back(d_next[n]);
        if (n + 1 < order) {
          S denom = q_next[n];
          if (eps.bit(n) == 1) denom = denom + e_next[m];
          if (is_zero(denom)) throw BreakdownError(k, n, "q+e");
          e_next.push_back(ek[n] * fk[n + 1] / denom);
        }
      }
    }
    t.f.push_back(std::move(fk));
    t.d.push_back(std::move(d_next));
    t.q.push_back(std::move(q_next));
    t.e.push_back(std::move(e_next));
  }
  return t;
}

/// Bidiagonal/bidiagonal pencil to tridiagonal matrix. Runs N steps plus
/// extra_levels additional ones (the extension feeds the polynomial identity
/// checks; the output slice never uses it). Output slice, in the time
/// indexing of this system: q_hat[n] = f[n][n], e_hat[n] = e[n + 1][n].
template <field_core S>
TodaRun<S> relativistic_toda(const std::vector<S>& q_init, const std::vector<S>& e_init,
                             std::size_t extra_levels = 0) {
  Trajectory<S> t = evolve_relativistic(q_init, e_init, q_init.size() + extra_levels);
  const std::size_t order = t.order;
  TransformResult<S> r;
  r.order = order;
  r.factor_count = 1;
  r.epsilon = t.epsilon;
  std::vector<S> q_hat;
  q_hat.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    q_hat.push_back(t.f[n][n]);
    if (n + 1 < order) r.e_hat.push_back(t.e[n + 1][n]);
  }
  r.q_hat.push_back(std::move(q_hat));
  return TodaRun<S>{std::move(r), std::move(t)};
}

/// Tridiagonal/bidiagonal pencil to tridiagonal matrix: eta_last + 1 steps,
/// output slice q_hat[n] = f[eta[n]][n], e_hat[n] = e[eta[n + 1]][n].
template <field_core S>
TodaRun<S> elementary_toda(const std::vector<S>& q_init, const std::vector<S>& e_init,
                           const EpsilonVector& eps, std::size_t extra_levels = 0) {
  Trajectory<S> t = evolve_elementary(q_init, e_init, eps, eps.eta_last() + 1 + extra_levels);
  const std::size_t order = t.order;
  TransformResult<S> r;
  r.order = order;
  r.factor_count = 1;
  r.epsilon = eps;
  std::vector<S> q_hat;
  q_hat.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    q_hat.push_back(t.f[eps.eta(n)][n]);
    if (n + 1 < order) r.e_hat.push_back(t.e[eps.eta(n + 1)][n]);
  }
  r.q_hat.push_back(std::move(q_hat));
  return TodaRun<S>{std::move(r), std::move(t)};
}

/// Hessenberg/bidiagonal pencil to Hessenberg matrix: (eta_last + 1) M steps,
/// output slice q_hat[j][n] = f[j + eta[n] M][n], e_hat[n] = e[eta[n + 1] M][n].
template <field_core S>
TodaRun<S> hungry_toda(const PencilSpec<S>& spec, std::size_t extra_levels = 0) {
  const std::size_t factors = spec.factor_count;
  Trajectory<S> t = evolve_hungry(spec, (spec.epsilon.eta_last() + 1) * factors + extra_levels);
  const std::size_t order = t.order;
  TransformResult<S> r;
  r.order = order;
  r.factor_count = factors;
  r.epsilon = t.epsilon;
  for (std::size_t j = 0; j < factors; ++j) {
    std::vector<S> q_hat;
    q_hat.reserve(order);
    for (std::size_t n = 0; n < order; ++n) q_hat.push_back(t.f[j + t.epsilon.eta(n) * factors][n]);
    r.q_hat.push_back(std::move(q_hat));
  }
  for (std::size_t n = 0; n + 1 < order; ++n) r.e_hat.push_back(t.e[t.epsilon.eta(n + 1) * factors][n]);
  return TodaRun<S>{std::move(r), std::move(t)};
}

}  // namespace gevp
