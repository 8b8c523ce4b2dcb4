#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "obsq/errors.hpp"
#include "obsq/matrix.hpp"
#include "obsq/obscure_state.hpp"
#include "sampling.hpp"

using namespace obsq;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInv = std::numbers::sqrt2 / 2.0;
}  // namespace

TEST_CASE("constructor enforces the state contract") {
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0)}, {1.0}, MembershipModel::Arc),
                  DomainError);  // d >= 2
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0), Complex(0, 0)}, {1.0},
                               MembershipModel::Arc),
                  DomainError);  // length mismatch
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0), Complex(1, 0)}, {1.0, 0.0},
                               MembershipModel::Arc),
                  NormalizationError);
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0), Complex(0, 0)}, {1.5, 0.0},
                               MembershipModel::Arc),
                  RangeError);
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0), Complex(0, 0)}, {-0.2, 1.0},
                               MembershipModel::Arc),
                  RangeError);
  // Born-like additionally pins the membership norm.
  CHECK_THROWS_AS(ObscureQudit({Complex(1, 0), Complex(0, 0)}, {0.5, 0.5},
                               MembershipModel::BornLike),
                  NormalizationError);
  // ... which the other models do not.
  const ObscureQudit arc({Complex(1, 0), Complex(0, 0)}, {0.5, 0.5},
                         MembershipModel::Arc);
  CHECK(arc.normalized());
}

TEST_CASE("normalization error reports the failing sector") {
  try {
    ObscureQudit({Complex(1, 0), Complex(1, 0)}, {1.0, 0.0},
                 MembershipModel::Arc);
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& e) {
    CHECK(e.sector() == NormalizationError::Sector::Quantum);
    CHECK(std::abs(e.actual() - 2.0) <= 1e-12);
  }
  try {
    ObscureQudit({Complex(1, 0), Complex(0, 0)}, {1.0, 1.0},
                 MembershipModel::BornLike);
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& e) {
    CHECK(e.sector() == NormalizationError::Sector::Membership);
    CHECK(std::abs(e.actual() - 2.0) <= 1e-12);
  }
}

TEST_CASE("probabilities ignore membership amplitudes") {
  const ObscureQudit s({Complex(0.6, 0), Complex(0, 0.8)}, {0.0, 1.0},
                       MembershipModel::Arc);
  const auto p = s.probabilities();
  CHECK(std::abs(p[0] - 0.36) <= 1e-15);
  CHECK(std::abs(p[1] - 0.64) <= 1e-15);
}

TEST_CASE("memberships delegate to the state's model") {
  const ObscureQudit s({Complex(kInv, 0), Complex(kInv, 0)}, {0.6, 0.8},
                       MembershipModel::BornLike);
  const auto mu = s.memberships();
  CHECK(std::abs(mu[0] - 0.36) <= 1e-15);
  CHECK(std::abs(mu[1] - 0.64) <= 1e-15);
}

TEST_CASE("norm is the squared combined length") {
  const ObscureQudit s({Complex(kInv, 0), Complex(0, kInv)}, {0.6, 0.8},
                       MembershipModel::BornLike);
  CHECK(std::abs(s.norm() - (0.36 * 0.5 + 0.64 * 0.5)) <= 1e-15);
  const auto c = s.combined();
  CHECK(std::abs(c[0] - Complex(0.6 * kInv, 0)) <= 1e-15);
  CHECK(std::abs(c[1] - Complex(0, 0.8 * kInv)) <= 1e-15);
}

TEST_CASE("bloch norm along the diagonal family bottoms out at 1/2") {
  const ObscureQudit mid = from_bloch({kPi / 2, 0.0, kPi / 2});
  CHECK(std::abs(mid.norm() - 0.5) <= 1e-12);
  // With theta = theta_mu the norm is 1 - sin^2(theta)/2, minimized at the
  // double midpoint.
  for (int k = 0; k <= 12; ++k) {
    const double theta = kPi * k / 12.0;
    const double s = std::sin(theta);
    const ObscureQudit q = from_bloch({theta, 0.7, theta});
    CHECK(std::abs(q.norm() - (1.0 - 0.5 * s * s)) <= 1e-12);
    CHECK(q.norm() >= 0.5 - 1e-12);
  }
}

TEST_CASE("bloch norm matches its cosine closed form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, 2 * kPi);
  for (int n = 0; n < 300; ++n) {
    const double theta = uni(rng);
    const double theta_mu = uni(rng);
    const ObscureQudit s = from_bloch({theta, phi(rng), theta_mu});
    const double closed = 0.5 + 0.25 * std::cos(theta + theta_mu) +
                          0.25 * std::cos(theta - theta_mu);
    CHECK(std::abs(s.norm() - closed) <= 1e-12);
    // The parametrization round-trips through probabilities/memberships.
    const double c2 = std::cos(theta / 2), s2 = std::sin(theta / 2);
    const double cm = std::cos(theta_mu / 2), sm = std::sin(theta_mu / 2);
    CHECK(std::abs(s.probabilities()[0] - c2 * c2) <= 1e-12);
    CHECK(std::abs(s.probabilities()[1] - s2 * s2) <= 1e-12);
    CHECK(std::abs(s.memberships()[0] - cm * cm) <= 1e-12);
    CHECK(std::abs(s.memberships()[1] - sm * sm) <= 1e-12);
  }
}

TEST_CASE("membership matrix basics") {
  const MembershipMatrix m(0.6, 0.8);
  CHECK(m.matrix()(0, 0) == 0.6);
  CHECK(m.matrix()(1, 1) == 0.8);
  CHECK(m.matrix()(0, 1) == 0.0);
  CHECK(std::abs(m.trace_m2() - 1.0) <= 1e-15);
  CHECK(m.invertible());
  CHECK(!MembershipMatrix(0.0, 1.0).invertible());
}

TEST_CASE("obscure measurement rescales the membership sector") {
  const ObscureQudit s({Complex(kInv, 0), Complex(kInv, 0)}, {0.6, 0.8},
                       MembershipModel::BornLike);
  const ObscureQudit once = obscure_measure(s);
  CHECK(!once.normalized());
  CHECK(std::abs(once.membership()[0] - 0.36) <= 1e-15);
  CHECK(std::abs(once.membership()[1] - 0.64) <= 1e-15);
  // The quantum sector is untouched.
  CHECK(once.quantum()[0] == s.quantum()[0]);
  CHECK(once.quantum()[1] == s.quantum()[1]);
}

TEST_CASE("measuring twice equals measuring with the squared matrix") {
  // Dyadic amplitudes make the products exact.
  const ObscureQudit s = ObscureQudit::unnormalized(
      {Complex(kInv, 0), Complex(kInv, 0)}, {0.5, 0.25},
      MembershipModel::Arc);
  const MembershipMatrix m(0.5, 0.25);
  const MembershipMatrix m2(0.25, 0.0625);
  const ObscureQudit twice = obscure_measure(m, obscure_measure(m, s));
  const ObscureQudit squared = obscure_measure(m2, s);
  CHECK(twice.membership()[0] == squared.membership()[0]);
  CHECK(twice.membership()[1] == squared.membership()[1]);
}

TEST_CASE("obscure measurement rejects higher dimensions") {
  const ObscureQudit s = ObscureQudit::unnormalized(
      {Complex(1, 0), Complex(0, 0), Complex(0, 0)}, {1.0, 0.0, 0.0},
      MembershipModel::BornLike);
  CHECK_THROWS_AS(obscure_measure(s), DomainError);
}

TEST_CASE("density2 is the combined rank-one matrix") {
  const ObscureQudit s({Complex(kInv, 0), Complex(0, kInv)}, {0.6, 0.8},
                       MembershipModel::BornLike);
  const Mat2c rho = density2(s);
  // rho(i,j) = conj(c_i) c_j.
  const auto c = s.combined();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(rho(i, j) - std::conj(c[i]) * c[j]) <= 1e-15);
  CHECK(std::abs(determinant(rho)) <= 1e-12);
  CHECK(std::abs(trace(rho) - s.norm()) <= 1e-15);
}

TEST_CASE("density2 idempotence marks exactly the basis states") {
  // Basis states: unit trace, idempotent.
  const ObscureQudit e0({Complex(1, 0), Complex(0, 0)}, {1.0, 0.0},
                        MembershipModel::BornLike);
  const Mat2c rho = density2(e0);
  CHECK(max_abs_diff(rho * rho, rho) <= 1e-12);

  // Interior states: trace < 1, visibly non-idempotent.
  std::mt19937_64 rng(23);
  for (int n = 0; n < 200; ++n) {
    const ObscureQudit s = obsq::testing::random_interior_qudit(rng);
    const Mat2c r = density2(s);
    CHECK(trace(r).real() < 1.0 - 1e-6);
    CHECK(max_abs_diff(r * r, r) > 1e-6);
  }
}

TEST_CASE("classical-quantum combination validates and combines") {
  CHECK_THROWS_AS(from_classical_quantum(Complex(1, 0), Complex(0, 0), -0.1,
                                         0.5),
                  RangeError);
  CHECK_THROWS_AS(from_classical_quantum(Complex(1, 0), Complex(0, 0), 0.5,
                                         1.1),
                  RangeError);
  const auto [c0, c1] =
      from_classical_quantum(Complex(kInv, 0), Complex(kInv, 0), 0.0, 1.0);
  CHECK(std::abs(c0 - Complex(kInv, 0)) <= 1e-15);
  CHECK(std::abs(c1 - Complex(kInv, 0)) <= 1e-15);
}
