#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "obsq/matrix.hpp"
#include "obsq/membership.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

// Double Bloch-style parametrization: theta/phi locate the quantum
// amplitudes, theta_mu locates the membership amplitudes.
// Ranges: theta in [0,pi], phi in [0,2pi], theta_mu in [0,pi].
struct BlochParams {
  double theta{};
  double phi{};
  double theta_mu{};
};

// Diagonal operator diag(alpha_0, alpha_1) acting on the quantum amplitudes
// of a two-state system; equals alpha_0*P0 + alpha_1*P1 for the standard
// rank-one projectors.
class MembershipMatrix {
 public:
  MembershipMatrix(double alpha0, double alpha1)
      : alpha0_(alpha0), alpha1_(alpha1) {}

  double alpha0() const { return alpha0_; }
  double alpha1() const { return alpha1_; }
  Mat2r matrix() const { return Mat2r::diagonal({alpha0_, alpha1_}); }

  // trace(M^2) = alpha_0^2 + alpha_1^2.
  double trace_m2() const { return alpha0_ * alpha0_ + alpha1_ * alpha1_; }

  // Invertible iff both diagonal entries are nonzero.
  bool invertible(double tol = kDefaultTolerance) const {
    return std::abs(alpha0_) > tol && std::abs(alpha1_) > tol;
  }

 private:
  double alpha0_;
  double alpha1_;
};

// A d-state system carrying a complex probability amplitude and a real
// membership amplitude per basis state. The two families are stored
// separately; the combined coefficient alpha_i * a_i is a derived view.
//
// The validating constructor enforces:
//   - d >= 2 and matching lengths,
//   - sum |a_i|^2 = 1 within tol (else NormalizationError{Quantum}),
//   - each alpha_i in [0,1] (else RangeError),
//   - under BornLike, sum alpha_i^2 = 1 within tol
//     (else NormalizationError{Membership}).
// `unnormalized` skips all of that for intermediates (e.g. measurement
// results); such states answer normalized() == false.
class ObscureQudit {
 public:
  ObscureQudit(std::vector<Complex> quantum, std::vector<double> membership,
               MembershipModel model, double tol = kDefaultTolerance);

  static ObscureQudit unnormalized(std::vector<Complex> quantum,
                                   std::vector<double> membership,
                                   MembershipModel model);

  std::size_t dim() const { return quantum_.size(); }
  const std::vector<Complex>& quantum() const { return quantum_; }
  const std::vector<double>& membership() const { return membership_; }
  MembershipModel model() const { return model_; }
  bool normalized() const { return normalized_; }

  // Born probabilities |a_i|^2 — membership amplitudes play no role here.
  std::vector<double> probabilities() const;

  // Membership functions of the state's membership amplitudes under its model.
  MembershipVector memberships(double tol = kDefaultTolerance) const;

  // <psi|psi> with combined coefficients: sum alpha_i^2 |a_i|^2. Not 1 in
  // general; for the two-state Bloch form see the closed form in the tests.
  double norm() const;

  // Combined coefficients alpha_i * a_i.
  std::vector<Complex> combined() const;

 private:
  ObscureQudit(std::vector<Complex> quantum, std::vector<double> membership,
               MembershipModel model, bool normalized, int /*tag*/);

  std::vector<Complex> quantum_;
  std::vector<double> membership_;
  MembershipModel model_;
  bool normalized_;
};

// Two-state qudit from the double Bloch parametrization:
//   a = (cos(theta/2), e^{i phi} sin(theta/2))
//   alpha = (cos(theta_mu/2), sin(theta_mu/2))
// Always BornLike-normalized by the trig identities.
ObscureQudit from_bloch(const BlochParams& params,
                        double tol = kDefaultTolerance);

inline MembershipMatrix membership_matrix(double alpha0, double alpha1) {
  return MembershipMatrix(alpha0, alpha1);
}

// Applies M to the membership amplitudes: the combined coefficients become
// m_i * alpha_i * a_i (with M built from the state's own alpha: alpha_i^2 a_i).
// The operation is linear and reversible when M is invertible, but not
// unitary; the result is flagged unnormalized. Two-state only.
ObscureQudit obscure_measure(const MembershipMatrix& m,
                             const ObscureQudit& state);

// Convenience: measure with the matrix built from the state's own alpha.
ObscureQudit obscure_measure(const ObscureQudit& state);

// Rank-one density matrix of the combined coefficients c_i = alpha_i a_i,
// laid out as rho(i,j) = c_i^* c_j (quantum parts conjugated in the first
// index). det = 0 always; trace = norm(); idempotent iff trace = 1, which on
// the valid state space happens exactly at the two basis states.
Mat2c density2(const ObscureQudit& state);

// Combined coefficients of a two-function classical register carried over a
// two-state quantum system:
//   (c_f sqrt(1-f) + c_g sqrt(1-g), c_f sqrt(f) + c_g sqrt(g)).
// Requires f, g in [0,1].
std::pair<Complex, Complex> from_classical_quantum(Complex cf, Complex cg,
                                                   double f, double g);

}  // namespace obsq
