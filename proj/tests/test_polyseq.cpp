#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gevp/polyseq.hpp"
#include "gevp/verify.hpp"
#include "test_support.hpp"

using namespace testsupport;
using gevp::EpsilonVector;
using gevp::PolyFamily;
using gevp::Polynomial;
using gevp::Rational;

namespace {

using Poly = Polynomial<Rational>;

Poly poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(Rational(v));
  return Poly(std::move(c));
}

void require_all_pass(const gevp::IdentityReport& report, bool expect_points = true) {
  for (const auto& c : report.checks) {
    INFO(c.name << " fails first at (k=" << c.fail_k << ", n=" << c.fail_n << ")");
    CHECK(c.pass);
    if (expect_points) CHECK(c.points > 0);
  }
}

}  // namespace

TEST_CASE("degree-one family members") {
  const auto run = gevp::relativistic_toda(rats(g2_q), rats(g2_e));
  const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
  CHECK(fam.at(0, 0) == Poly::one());
  CHECK(fam.at(0, 1) == poly({-1, 1}));  // x - q_0 = x - 1
  CHECK(fam.at(3, 0) == Poly::one());
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(fam.at(0, n).degree() == static_cast<int>(n));
    if (n > 0) CHECK(fam.at(0, n).leading() == Rational(1));  // monic
  }
}

TEST_CASE("all-zero mask reduces to the plain orthogonal recurrence") {
  InstanceGen gen(51);
  const auto q = gen.positive_vector(4);
  const auto e = gen.positive_vector(3);
  const auto run = gevp::elementary_toda(q, e, EpsilonVector::zeros(4));
  const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
  CHECK(fam.at(0, 1) == Poly(std::vector<Rational>{-q[0], Rational(1)}));
  // p_2 = (x - q_1 - e_0) p_1 - q_0 e_0 p_0
  const Poly p2 = Poly(std::vector<Rational>{-q[1] - e[0], Rational(1)}) * fam.at(0, 1) -
                  Poly::constant(q[0] * e[0]);
  CHECK(fam.at(0, 2) == p2);
}

TEST_CASE("general construction agrees with the direct recurrence for M = 1") {
  InstanceGen gen(52);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t order = 2 + rep % 4;
    const auto spec = gen.random_spec(order, 1);
    // Extra levels so the inductive route has headroom up to degree N.
    const auto run = gevp::elementary_toda(spec.q[0], spec.e, spec.epsilon, order + 2);
    const auto direct = gevp::build_family_m1(run.trajectory, spec.epsilon);
    const auto inductive = gevp::build_family_general(run.trajectory);
    std::size_t compared = 0;
    for (std::size_t k = 0; k < inductive.table.size(); ++k)
      for (std::size_t n = 0; n < inductive.table[k].size(); ++n)
        if (direct.has(k, n)) {
          CHECK(direct.at(k, n) == inductive.at(k, n));
          ++compared;
        }
    CHECK(compared > 0);
  }
}

TEST_CASE("family accessor reports missing entries") {
  const auto run = gevp::hungry_toda(g4_spec());
  const auto fam = gevp::build_family_general(run.trajectory);
  CHECK(fam.has(0, 6));
  CHECK(!fam.has(0, 100));
  CHECK_THROWS_AS(fam.at(200, 1), gevp::InsufficientTrajectory);
  CHECK(fam.at(0, 1) == poly({-1, 1}));  // x - q_0^(0) = x - 1
}

TEST_CASE("identity suite passes on the order-5 worked example") {
  const auto run = gevp::relativistic_toda(rats(g2_q), rats(g2_e), /*extra_levels=*/2);
  const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
  require_all_pass(gevp::check_identities(fam, run.trajectory, run.result));
}

TEST_CASE("identity suite passes on the order-6 worked example") {
  const auto run = gevp::elementary_toda(rats(g3_q), rats(g3_e), EpsilonVector(g3_eps), 2);
  const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
  require_all_pass(gevp::check_identities(fam, run.trajectory, run.result));
}

TEST_CASE("identity suite passes on the three-factor worked example") {
  const auto run = gevp::hungry_toda(g4_spec(), /*extra_levels=*/8);
  const auto fam = gevp::build_family_general(run.trajectory);
  require_all_pass(gevp::check_identities(fam, run.trajectory, run.result));
}

TEST_CASE("identity suite is vacuously green on order-1 trajectories") {
  const auto run = gevp::relativistic_toda(rats({"5"}), {});
  const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
  const auto report = gevp::check_identities(fam, run.trajectory, run.result);
  CHECK(report.all_pass());
}

TEST_CASE("identity suite passes on random positive instances") {
  InstanceGen gen(53);
  for (int rep = 0; rep < 12; ++rep) {
    const std::size_t order = 2 + rep % 4;
    const std::size_t factors = 1 + rep % 3;
    const auto spec = gen.random_spec(order, factors);
    const auto run = gevp::hungry_toda(spec, /*extra_levels=*/(order + 3) * factors);
    const auto fam = factors == 1 ? gevp::build_family_m1(run.trajectory, spec.epsilon)
                                  : gevp::build_family_general(run.trajectory);
    require_all_pass(gevp::check_identities(fam, run.trajectory, run.result));
  }
}

TEST_CASE("identity checker flags corrupted trajectories") {
  auto fresh = [] {
    return gevp::elementary_toda(rats(g3_q), rats(g3_e), EpsilonVector(g3_eps), 2);
  };

  // Each table feeds its own identity, so each corruption must be caught by
  // the matching check.
  {
    auto run = fresh();
    run.trajectory.f[1][2] += Rational(1);
    const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
    const auto report = gevp::check_identities(fam, run.trajectory);
    const auto* c = report.find("christoffel");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
  }
  {
    auto run = fresh();
    run.trajectory.e[1][0] += Rational(1);
    const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
    const auto report = gevp::check_identities(fam, run.trajectory);
    const auto* c = report.find("geronimus");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
  }
  {
    auto run = fresh();
    run.trajectory.d[2][1] += Rational(1);
    const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
    const auto report = gevp::check_identities(fam, run.trajectory);
    const auto* c = report.find("d-form");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
  }
  {
    // A corrupted output slice breaks the assembled vector relation even
    // though the trajectory itself is consistent.
    auto run = fresh();
    run.result.e_hat[2] += Rational(1);
    const auto fam = gevp::build_family_m1(run.trajectory, run.trajectory.epsilon);
    const auto report = gevp::check_identities(fam, run.trajectory, run.result);
    const auto* c = report.find("T_hat p_hat + p_N = x p_hat");
    REQUIRE(c != nullptr);
    CHECK(!c->pass);
  }
}

TEST_CASE("terminating polynomial roots match the pencil eigenvalues") {
  // For M = 1 the zeros of p_N coincide with the generalized eigenvalues,
  // certified two ways: p_N equals the pencil charpoly up to normalization,
  // and its Sturm roots match the printed values.
  const auto spec = g3_spec();
  const auto run = gevp::elementary_toda(spec.q[0], spec.e, spec.epsilon);
  const auto fam = gevp::build_family_m1(run.trajectory, spec.epsilon);
  const auto pn = fam.at(0, 6).monic();
  const auto [a, b] = gevp::assemble_pencil(spec);
  CHECK(pn == gevp::charpoly(a, b));

  const auto report = gevp::real_roots(pn, 1e-10);
  REQUIRE(report.roots.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(std::abs(report.roots[i].value - g3_eigs[i]) / g3_eigs[i] <= 5e-7);
}
