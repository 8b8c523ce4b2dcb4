#include "obsq/obscure_state.hpp"

#include <cmath>
#include <utility>

#include "obsq/errors.hpp"

namespace obsq {

ObscureQudit::ObscureQudit(std::vector<Complex> quantum,
                           std::vector<double> membership,
                           MembershipModel model, bool normalized, int)
    : quantum_(std::move(quantum)),
      membership_(std::move(membership)),
      model_(model),
      normalized_(normalized) {}

ObscureQudit::ObscureQudit(std::vector<Complex> quantum,
                           std::vector<double> membership,
                           MembershipModel model, double tol)
    : ObscureQudit(std::move(quantum), std::move(membership), model, true, 0) {
  if (quantum_.size() < 2)
    throw DomainError("an obscure state needs at least two basis states");
  if (quantum_.size() != membership_.size())
    throw DomainError("quantum and membership amplitude counts differ");

  double qsum = 0.0;
  for (const Complex& a : quantum_) qsum += abs_sq(a);
  if (!nearly_equal(qsum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Quantum, qsum);

  double msum = 0.0;
  for (double alpha : membership_) {
    if (alpha < 0.0 - tol || alpha > 1.0 + tol)
      throw RangeError("membership amplitudes of a constructed state must lie in [0,1]");
    msum += alpha * alpha;
  }
  if (model_ == MembershipModel::BornLike && !nearly_equal(msum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Membership, msum);
}

ObscureQudit ObscureQudit::unnormalized(std::vector<Complex> quantum,
                                        std::vector<double> membership,
                                        MembershipModel model) {
  if (quantum.size() != membership.size() || quantum.size() < 2)
    throw DomainError("an obscure state needs matching amplitude lists of length >= 2");
  return ObscureQudit(std::move(quantum), std::move(membership), model, false, 0);
}

std::vector<double> ObscureQudit::probabilities() const {
  std::vector<double> p(quantum_.size());
  for (std::size_t i = 0; i < quantum_.size(); ++i) p[i] = abs_sq(quantum_[i]);
  return p;
}

MembershipVector ObscureQudit::memberships(double tol) const {
  return evaluate_membership(model_, membership_, tol);
}

double ObscureQudit::norm() const {
  double n = 0.0;
  for (std::size_t i = 0; i < quantum_.size(); ++i)
    n += membership_[i] * membership_[i] * abs_sq(quantum_[i]);
  return n;
}

std::vector<Complex> ObscureQudit::combined() const {
  std::vector<Complex> c(quantum_.size());
  for (std::size_t i = 0; i < quantum_.size(); ++i)
    c[i] = membership_[i] * quantum_[i];
  return c;
}

ObscureQudit from_bloch(const BlochParams& params, double tol) {
  const Complex phase(std::cos(params.phi), std::sin(params.phi));
  std::vector<Complex> quantum = {std::cos(params.theta / 2.0),
                                  phase * std::sin(params.theta / 2.0)};
  std::vector<double> membership = {std::cos(params.theta_mu / 2.0),
                                    std::sin(params.theta_mu / 2.0)};
  return ObscureQudit(std::move(quantum), std::move(membership),
                      MembershipModel::BornLike, tol);
}

ObscureQudit obscure_measure(const MembershipMatrix& m,
                             const ObscureQudit& state) {
  if (state.dim() != 2)
    throw DomainError("obscure measurement is defined for two-state systems");
  std::vector<double> membership = {m.alpha0() * state.membership()[0],
                                    m.alpha1() * state.membership()[1]};
  return ObscureQudit::unnormalized(state.quantum(), std::move(membership),
                                    state.model());
}

ObscureQudit obscure_measure(const ObscureQudit& state) {
  if (state.dim() != 2)
    throw DomainError("obscure measurement is defined for two-state systems");
  return obscure_measure(
      membership_matrix(state.membership()[0], state.membership()[1]), state);
}

Mat2c density2(const ObscureQudit& state) {
  if (state.dim() != 2)
    throw DomainError("density2 is defined for two-state systems");
  const std::vector<Complex> c = state.combined();
  Mat2c rho;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) rho(i, j) = std::conj(c[i]) * c[j];
  return rho;
}

std::pair<Complex, Complex> from_classical_quantum(Complex cf, Complex cg,
                                                   double f, double g) {
  if (f < 0.0 || f > 1.0 || g < 0.0 || g > 1.0)
    throw RangeError("classical register values must lie in [0,1]");
  return {cf * std::sqrt(1.0 - f) + cg * std::sqrt(1.0 - g),
          cf * std::sqrt(f) + cg * std::sqrt(g)};
}

}  // namespace obsq
