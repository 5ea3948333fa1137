#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gevp/polynomial.hpp"
#include "gevp/transform.hpp"
#include "gevp/verify.hpp"
#include "test_support.hpp"

using namespace testsupport;
using gevp::DenseMatrix;
using gevp::EpsilonVector;
using gevp::Polynomial;
using gevp::Rational;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
using Poly = Polynomial<Rational>;

Poly poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(Rational(v));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Poly p = poly({2, -3, 1});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p.eval(Rational(1)).is_zero());
  CHECK(p.eval(Rational(3)) == Rational(2));
  CHECK(p.derivative() == poly({-3, 2}));
  const auto [q, r] = divrem(p, poly({-1, 1}));
  CHECK(q == poly({-2, 1}));
  CHECK(r.is_zero());
  CHECK(gevp::gcd_monic(p, poly({-1, 1})) == poly({-1, 1}));
  CHECK((poly({0, 2}) * R("1/2")) == poly({0, 1}));
}

TEST_CASE("square-free decomposition recovers multiplicities") {
  // (x-1)^3 (x-2)
  const Poly p = poly({-1, 1}) * poly({-1, 1}) * poly({-1, 1}) * poly({-2, 1});
  const auto parts = gevp::squarefree_decompose(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == poly({-2, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == poly({-1, 1}));
  CHECK(parts[1].second == 3);
}

TEST_CASE("determinant by exact elimination") {
  auto m = DenseMatrix<Rational>(3);
  // Needs a row swap: first pivot is zero.
  const long vals[3][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 9}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Rational(vals[i][j]);
  CHECK(gevp::determinant(m) == Rational(-3));
  CHECK(gevp::determinant(DenseMatrix<Rational>::identity(4)) == Rational(1));
  auto sing = DenseMatrix<Rational>(2);
  sing.at(0, 0) = Rational(1);
  sing.at(0, 1) = Rational(2);
  sing.at(1, 0) = Rational(2);
  sing.at(1, 1) = Rational(4);
  CHECK(gevp::determinant(sing) == Rational(0));
}

TEST_CASE("charpoly of identity pencils and triangular matrices") {
  const auto id3 = DenseMatrix<Rational>::identity(3);
  CHECK(gevp::charpoly(id3, id3) == poly({-1, 3, -3, 1}).monic());  // (x-1)^3 normalized

  DenseMatrix<Rational> tri(2);
  tri.at(0, 0) = R("5/2");
  tri.at(0, 1) = Rational(1);
  tri.at(1, 1) = Rational(3);
  // x^2 - (a+b)x + ab
  const Poly want(std::vector<Rational>{R("15/2"), -(R("5/2") + Rational(3)), Rational(1)});
  CHECK(gevp::charpoly(tri) == want);
}

TEST_CASE("charpoly certifies the worked examples") {
  const auto s2 = g2_spec();
  const auto [a2, b2] = gevp::assemble_pencil(s2);
  const auto run2 = gevp::relativistic_toda(s2.q[0], s2.e);
  CHECK(gevp::charpoly(a2, b2) == gevp::charpoly(gevp::assemble_result(run2.result)));

  const auto s3 = g3_spec();
  const auto [a3, b3] = gevp::assemble_pencil(s3);
  const auto run3 = gevp::elementary_toda(s3.q[0], s3.e, s3.epsilon);
  CHECK(gevp::charpoly(a3, b3) == gevp::charpoly(gevp::assemble_result(run3.result)));

  const auto s4 = g4_spec();
  const auto [a4, b4] = gevp::assemble_pencil(s4);
  const auto run4 = gevp::hungry_toda(s4);
  CHECK(gevp::charpoly(a4, b4) == gevp::charpoly(gevp::assemble_result(run4.result)));
}

TEST_CASE("isospectral report on random positive pencils") {
  InstanceGen gen(41);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t order = 1 + rep % 5;
    const std::size_t factors = 1 + rep % 3;
    const auto spec = gen.random_spec(order, factors);
    const auto run = gevp::hungry_toda(spec);
    const auto report = gevp::verify_isospectral(spec, run.result);
    CHECK(report.equal);
    CHECK(report.pencil_charpoly.degree() == static_cast<int>(order));
    CHECK(report.pencil_charpoly.leading() == Rational(1));
  }
}

TEST_CASE("isospectral report flags a doctored result") {
  const auto spec = g3_spec();
  auto run = gevp::elementary_toda(spec.q[0], spec.e, spec.epsilon);
  run.result.q_hat[0][2] += Rational(1);
  const auto report = gevp::verify_isospectral(spec, run.result);
  CHECK(!report.equal);
}

TEST_CASE("moments of the output functional") {
  const auto run = gevp::relativistic_toda(rats(g2_q), rats(g2_e));
  const auto t = gevp::assemble_result(run.result);
  const auto ms = gevp::moments_from_tridiagonal(t, 4);
  CHECK(ms.at(1) == Rational(1));      // e0^T e0
  CHECK(ms.at(2) == Rational(7));      // the (0,0) entry of the output
  CHECK(ms.at(3) == t.at(0, 0) * t.at(0, 0) + t.at(0, 1) * t.at(1, 0));
  CHECK_THROWS_AS(ms.at(5), gevp::MissingMoments);

  const auto id = gevp::moments_from_tridiagonal(DenseMatrix<Rational>::identity(3), 5);
  for (long m = 1; m <= 5; ++m) CHECK(id.at(m) == Rational(1));
}

TEST_CASE("moments are linear in the polynomial argument") {
  InstanceGen gen(43);
  const auto spec = gen.random_spec(4, 1);
  const auto run = gevp::hungry_toda(spec);
  const auto t = gevp::assemble_result(run.result);
  const auto ms = gevp::moments_from_tridiagonal(t, 8);

  // L[pi] for pi = sum c_m x^m must equal sum c_m mu_(1+m); evaluate pi(T)
  // explicitly as the independent route.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<Rational> c;
    for (int i = 0; i < 6; ++i) c.push_back(Rational(coeff(rng)));
    DenseMatrix<Rational> acc(t.order());
    DenseMatrix<Rational> power = DenseMatrix<Rational>::identity(t.order());
    for (std::size_t m = 0; m < c.size(); ++m) {
      if (m > 0) power = power * t;
      for (std::size_t i = 0; i < t.order(); ++i)
        for (std::size_t j = 0; j < t.order(); ++j) acc.at(i, j) += power.at(i, j) * c[m];
    }
    Rational direct = acc.at(0, 0);
    Rational viasum;
    for (std::size_t m = 0; m < c.size(); ++m) viasum += c[m] * ms.at(1 + static_cast<long>(m));
    CHECK(direct == viasum);
  }
}

TEST_CASE("tau determinants") {
  gevp::MomentSequence ms;
  ms.start = 1;
  for (long v : {1, 2, 5, 14, 42, 132}) ms.mu.push_back(Rational(v));
  CHECK(gevp::tau(ms, 0, 1, 1) == Rational(1));
  CHECK(gevp::tau(ms, 1, 3, 1) == Rational(5));
  // 2x2 Hankel at k=1: mu1*mu3 - mu2^2
  CHECK(gevp::tau(ms, 2, 1, 1) == Rational(1 * 5 - 2 * 2));
  // block variant with M=2 at k=1: det [mu1 mu2; mu3 mu4]
  CHECK(gevp::tau(ms, 2, 1, 2) == Rational(1 * 14 - 2 * 5));
  CHECK_THROWS_AS(gevp::tau(ms, 3, 3, 2), gevp::MissingMoments);
}

TEST_CASE("tau ratio closed forms reproduce the transformation output") {
  const auto run2 = gevp::relativistic_toda(rats(g2_q), rats(g2_e));
  CHECK(gevp::check_tau_formulas(run2.result).all_pass());

  const auto run3 = gevp::elementary_toda(rats(g3_q), rats(g3_e), EpsilonVector(g3_eps));
  CHECK(gevp::check_tau_formulas(run3.result).all_pass());

  // Degenerate one-by-one case: q_hat_0 = mu2 / mu1.
  const auto run1 = gevp::relativistic_toda(rats({"4/3"}), {});
  CHECK(gevp::check_tau_formulas(run1.result).all_pass());

  InstanceGen gen(44);
  for (int rep = 0; rep < 10; ++rep) {
    const auto spec = gen.random_spec(2 + rep % 4, 1);
    const auto run = gevp::hungry_toda(spec);
    CHECK(gevp::check_tau_formulas(run.result).all_pass());
  }
}

TEST_CASE("tau oracle rejects multi-factor results") {
  const auto run = gevp::hungry_toda(g4_spec());
  CHECK_THROWS_AS(gevp::check_tau_formulas(run.result), std::invalid_argument);
}

TEST_CASE("tau oracle raises on a degenerate moment matrix") {
  // A vanished coupling makes tau_2^(1) = e_hat_0 * q_hat_0 = 0, which sits
  // in the denominator of the next ratio.
  gevp::TransformResult<Rational> degenerate;
  degenerate.order = 2;
  degenerate.factor_count = 1;
  degenerate.epsilon = EpsilonVector::ones(2);
  degenerate.q_hat = {rats({"1", "2"})};
  degenerate.e_hat = rats({"0"});
  CHECK_THROWS_AS(gevp::check_tau_formulas(degenerate), gevp::TauBreakdown);
}

TEST_CASE("real roots of a quadratic") {
  const auto report = gevp::real_roots(poly({2, -3, 1}), 1e-9);
  REQUIRE(report.roots.size() == 2);
  CHECK(report.roots[0].value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.roots[1].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.complex_count == 0);
  CHECK(report.all_real_simple());
}

TEST_CASE("real roots report multiplicity and complex content") {
  // (x-1)^3: one real root of multiplicity three.
  const auto cubed = gevp::real_roots(poly({-1, 3, -3, 1}), 1e-9);
  REQUIRE(cubed.roots.size() == 1);
  CHECK(cubed.roots[0].value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(cubed.roots[0].multiplicity == 3);
  CHECK(!cubed.all_real_simple());

  // x^2 + 1: no real roots.
  const auto gauss = gevp::real_roots(poly({1, 0, 1}), 1e-9);
  CHECK(gauss.roots.empty());
  CHECK(gauss.complex_count == 2);

  // (x^2 + 1)(x - 2)
  const auto mixed = gevp::real_roots(poly({1, 0, 1}) * poly({-2, 1}), 1e-9);
  REQUIRE(mixed.roots.size() == 1);
  CHECK(mixed.roots[0].value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(mixed.complex_count == 2);
}

TEST_CASE("roots land on exact rational values when hit") {
  // Roots 1 and 2 are midpoints of typical bisection intervals; the report
  // must still bracket them correctly.
  const auto report = gevp::real_roots(poly({2, -3, 1}), 1e-12);
  for (const auto& root : report.roots) {
    CHECK(root.lo <= root.hi);
    CHECK((root.hi - root.lo) <= Rational::from_double(1e-12));
  }
}

TEST_CASE("printed eigenvalue lists are reproduced") {
  auto check_list = [](const gevp::Polynomial<Rational>& p, const std::vector<double>& want) {
    const auto report = gevp::real_roots(p, 1e-12);
    REQUIRE(report.roots.size() == want.size());
    CHECK(report.all_real_simple());
    for (std::size_t i = 0; i < want.size(); ++i) {
      const double rel = std::abs(report.roots[i].value - want[i]) / std::abs(want[i]);
      CHECK(rel <= 5e-7);
    }
  };

  const auto [a2, b2] = gevp::assemble_pencil(g2_spec());
  check_list(gevp::charpoly(a2, b2), g2_eigs);

  const auto [a3, b3] = gevp::assemble_pencil(g3_spec());
  check_list(gevp::charpoly(a3, b3), g3_eigs);

  const auto [a4, b4] = gevp::assemble_pencil(g4_spec());
  check_list(gevp::charpoly(a4, b4), g4_eigs);
}
