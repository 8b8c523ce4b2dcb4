#include "obsq/kron_state.hpp"

#include <cmath>
#include <numbers>

#include "obsq/errors.hpp"

namespace obsq {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_amplitude(const ObscureAmplitude& amp, double tol) {
  if (std::abs(amp.a) > 1.0 + tol)
    throw RangeError("quantum amplitude magnitude exceeds 1");
  if (amp.alpha < -1.0 - tol || amp.alpha > 1.0 + tol)
    throw RangeError("membership amplitude must lie in [-1,1]");
}

}  // namespace

TotalBasisVector total_basis(int index) {
  if (index != 0 && index != 1)
    throw DomainError("doubled basis index must be 0 or 1");
  TotalBasisVector v;
  v.index = index;
  v.e[index] = 1.0;
  v.epsilon[index] = 1.0;
  return v;
}

KroneckerQubit::KroneckerQubit(ObscureAmplitude a0, ObscureAmplitude a1,
                               double tol)
    : a0_(a0), a1_(a1) {
  check_amplitude(a0_, tol);
  check_amplitude(a1_, tol);
  const double qsum = abs_sq(a0_.a) + abs_sq(a1_.a);
  if (!nearly_equal(qsum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Quantum, qsum);
  const double msum = a0_.alpha * a0_.alpha + a1_.alpha * a1_.alpha;
  if (!nearly_equal(msum, 1.0, tol))
    throw NormalizationError(NormalizationError::Sector::Membership, msum);
}

KroneckerQubit KroneckerQubit::basis(int index) {
  if (index != 0 && index != 1)
    throw DomainError("doubled basis index must be 0 or 1");
  ObscureAmplitude on{Complex(1.0, 0.0), 1.0};
  ObscureAmplitude off{Complex(0.0, 0.0), 0.0};
  return index == 0 ? KroneckerQubit(on, off) : KroneckerQubit(off, on);
}

KronColumn kron_like(const ObscureAmplitude& amp, int e_index) {
  if (e_index != 0 && e_index != 1)
    throw DomainError("doubled basis index must be 0 or 1");
  KronColumn col;
  col.quantum[e_index] = amp.a;
  col.membership[e_index] = amp.alpha;
  return col;
}

KronColumn column(const KroneckerQubit& ket) {
  KronColumn col;
  col.quantum = ket.quantum();
  col.membership = ket.membership();
  return col;
}

KronColumn physical_column(const KroneckerQubit& ket) {
  return kInvSqrt2 * column(ket);
}

Complex inner(const KroneckerQubit& bra, const KroneckerQubit& ket) {
  Complex s = 0.0;
  s += std::conj(bra.A0().a) * ket.A0().a;
  s += std::conj(bra.A1().a) * ket.A1().a;
  s += bra.A0().alpha * ket.A0().alpha;
  s += bra.A1().alpha * ket.A1().alpha;
  return 0.5 * s;
}

Complex inner(const KroneckerQubit& bra, const KronColumn& ket) {
  Complex s = 0.0;
  s += std::conj(bra.A0().a) * ket.quantum[0];
  s += std::conj(bra.A1().a) * ket.quantum[1];
  s += bra.A0().alpha * ket.membership[0];
  s += bra.A1().alpha * ket.membership[1];
  return kInvSqrt2 * s;
}

Mat4c density4(const KroneckerQubit& ket) {
  const std::array<Complex, 4> u = {ket.A0().a, ket.A1().a,
                                    Complex(ket.A0().alpha),
                                    Complex(ket.A1().alpha)};
  const std::array<Complex, 4> w = {std::conj(ket.A0().a),
                                    std::conj(ket.A1().a),
                                    Complex(ket.A0().alpha),
                                    Complex(ket.A1().alpha)};
  Mat4c rho;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rho(i, j) = 0.5 * u[i] * w[j];
  return rho;
}

KroneckerQubit from_prob_membership(double p, double mu,
                                    MembershipModel model) {
  if (p < 0.0 || p > 1.0)
    throw RangeError("probability must lie in [0,1]");
  if (mu < 0.0 || mu > 1.0)
    throw RangeError("membership must lie in [0,1]");

  const Complex a0 = std::sqrt(p);
  const Complex a1 = std::sqrt(1.0 - p);
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  switch (model) {
    case MembershipModel::Arc:
      alpha0 = std::cos(std::numbers::pi * mu / 2.0);
      alpha1 = std::sin(std::numbers::pi * mu / 2.0);
      break;
    case MembershipModel::BornLike:
      alpha0 = std::sqrt(mu);
      alpha1 = std::sqrt(1.0 - mu);
      break;
    case MembershipModel::CircleSquare:
      throw DomainError(
          "no circle-square construction from a probability/membership pair");
  }
  return KroneckerQubit({a0, alpha0}, {a1, alpha1});
}

MembershipVector memberships(const KroneckerQubit& ket, MembershipModel model,
                             double tol) {
  const std::array<double, 2> alpha = ket.membership();
  return evaluate_membership(model, alpha, tol);
}

KroneckerQubit to_kronecker(const ObscureQudit& state, double tol) {
  if (state.dim() != 2)
    throw DomainError("only two-state systems have a doubled form");
  return KroneckerQubit({state.quantum()[0], state.membership()[0]},
                        {state.quantum()[1], state.membership()[1]}, tol);
}

}  // namespace obsq
