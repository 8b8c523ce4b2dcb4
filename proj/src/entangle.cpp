#include "obsq/entangle.hpp"

#include <cmath>
#include <numbers>

#include "obsq/errors.hpp"

namespace obsq {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

Complex det2(const Mat2c& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
double det2(const Mat2r& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

}  // namespace

TwoQubitRegister::TwoQubitRegister(Mat2c b, Mat2r beta, bool normalized, int)
    : b_(b), beta_(beta), normalized_(normalized) {}

TwoQubitRegister::TwoQubitRegister(Mat2c b, Mat2r beta, double tol)
    : TwoQubitRegister(b, beta, true, 0) {
  double qsum = 0.0;
  double msum = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      qsum += abs_sq(b_(i, j));
      msum += beta_(i, j) * beta_(i, j);
    }
  if (!nearly_equal(qsum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Quantum, qsum);
  if (!nearly_equal(msum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Membership, msum);
}

TwoQubitRegister TwoQubitRegister::unnormalized(Mat2c b, Mat2r beta) {
  return TwoQubitRegister(b, beta, false, 0);
}

std::array<Complex, 4> TwoQubitRegister::b_vector() const {
  return {b_(0, 0), b_(1, 0), b_(0, 1), b_(1, 1)};
}

std::array<double, 4> TwoQubitRegister::beta_vector() const {
  return {beta_(0, 0), beta_(1, 0), beta_(0, 1), beta_(1, 1)};
}

TwoQubitRegister TwoQubitRegister::from_vectors(
    const std::array<Complex, 4>& b, const std::array<double, 4>& beta,
    bool normalized) {
  Mat2c bm;
  Mat2r mm;
  bm(0, 0) = b[0];
  bm(1, 0) = b[1];
  bm(0, 1) = b[2];
  bm(1, 1) = b[3];
  mm(0, 0) = beta[0];
  mm(1, 0) = beta[1];
  mm(0, 1) = beta[2];
  mm(1, 1) = beta[3];
  if (normalized) return TwoQubitRegister(bm, mm);
  return TwoQubitRegister::unnormalized(bm, mm);
}

TwoQubitRegister tensor_two(const KroneckerQubit& x, const KroneckerQubit& y) {
  Mat2c b;
  Mat2r beta;
  const std::array<Complex, 2> xa = x.quantum();
  const std::array<Complex, 2> ya = y.quantum();
  const std::array<double, 2> xm = x.membership();
  const std::array<double, 2> ym = y.membership();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      b(i, j) = kInvSqrt2 * xa[i] * ya[j];
      beta(i, j) = kInvSqrt2 * xm[i] * ym[j];
    }
  return TwoQubitRegister::unnormalized(b, beta);
}

SeparabilityFlags is_separable(const TwoQubitRegister& reg, double tol) {
  return {std::abs(det2(reg.b())) <= tol, std::abs(det2(reg.beta())) <= tol};
}

std::pair<double, double> vector_concurrence(const TwoQubitRegister& reg) {
  return {2.0 * std::abs(det2(reg.b())), 2.0 * std::abs(det2(reg.beta()))};
}

double scalar_concurrence(const TwoQubitRegister& reg) {
  const auto [cq, cmu] = vector_concurrence(reg);
  return std::sqrt((cq * cq + cmu * cmu) / 2.0);
}

Concurrence concurrence(const TwoQubitRegister& reg) {
  const auto [cq, cmu] = vector_concurrence(reg);
  return {cq, cmu, std::sqrt((cq * cq + cmu * cmu) / 2.0)};
}

RegisterReport register_report(const TwoQubitRegister& reg,
                               MembershipModel model) {
  if (model != MembershipModel::BornLike)
    throw DomainError(
        "register outcome tables are defined for the born model only");
  RegisterReport out;
  const std::array<Complex, 4> b = reg.b_vector();
  const std::array<double, 4> beta = reg.beta_vector();
  double qsum = 0.0;
  double msum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    out.probabilities[k] = abs_sq(b[k]);
    out.memberships[k] = beta[k] * beta[k];
    qsum += out.probabilities[k];
    msum += out.memberships[k];
  }
  if (qsum <= 0.0 || msum <= 0.0)
    throw DomainError("cannot report on an all-zero register sector");
  for (std::size_t k = 0; k < 4; ++k) {
    out.probabilities[k] /= qsum;
    out.memberships[k] /= msum;
  }
  return out;
}

}  // namespace obsq
