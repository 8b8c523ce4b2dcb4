#pragma once

#include <array>
#include <cstddef>

#include "obsq/matrix.hpp"
#include "obsq/membership.hpp"
#include "obsq/numeric.hpp"
#include "obsq/obscure_state.hpp"

namespace obsq {

// One column of a doubled state: a complex probability amplitude paired with
// a real membership amplitude. |a| <= 1 and alpha in [-1,1] (within tol);
// negative membership amplitudes appear after gate application.
struct ObscureAmplitude {
  Complex a{};
  double alpha{};

  bool operator==(const ObscureAmplitude&) const = default;
};

// A raw 4-component column over the doubled basis (e_0, e_1 | eps_0, eps_1):
// two complex quantum entries stacked over two real membership entries.
// Projection results and assembled states live here; no normalization is
// implied.
struct KronColumn {
  std::array<Complex, 2> quantum{};
  std::array<double, 2> membership{};

  KronColumn& operator+=(const KronColumn& rhs) {
    quantum[0] += rhs.quantum[0];
    quantum[1] += rhs.quantum[1];
    membership[0] += rhs.membership[0];
    membership[1] += rhs.membership[1];
    return *this;
  }
  friend KronColumn operator+(KronColumn lhs, const KronColumn& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend KronColumn operator*(double s, KronColumn col) {
    col.quantum[0] *= s;
    col.quantum[1] *= s;
    col.membership[0] *= s;
    col.membership[1] *= s;
    return col;
  }
};

// Doubled basis vector E_index = (e_index | eps_index): a unit vector in the
// quantum block stacked over the matching unit vector in the membership block.
struct TotalBasisVector {
  int index{};
  std::array<double, 2> e{};
  std::array<double, 2> epsilon{};
};

TotalBasisVector total_basis(int index);

// A two-state system in doubled form: column i carries the pair
// (a_i, alpha_i). The global 1/sqrt(2) of the assembled state is implicit in
// the storage and applied inside inner() and density4().
//
// Constructor enforces per-column ranges plus
//   sum |a_i|^2 = 1 (NormalizationError{Quantum}) and
//   sum alpha_i^2 = 1 (NormalizationError{Membership}), both within tol.
class KroneckerQubit {
 public:
  KroneckerQubit(ObscureAmplitude a0, ObscureAmplitude a1,
                 double tol = kDefaultTolerance);

  // E_index as a state: amplitude pair (1,1) in that slot, (0,0) in the other.
  static KroneckerQubit basis(int index);

  const ObscureAmplitude& A0() const { return a0_; }
  const ObscureAmplitude& A1() const { return a1_; }

  std::array<Complex, 2> quantum() const { return {a0_.a, a1_.a}; }
  std::array<double, 2> membership() const { return {a0_.alpha, a1_.alpha}; }

  std::array<double, 2> probabilities() const {
    return {abs_sq(a0_.a), abs_sq(a1_.a)};
  }

 private:
  ObscureAmplitude a0_;
  ObscureAmplitude a1_;
};

// Kronecker-like product of an amplitude pair with a doubled basis vector:
// the quantum entry multiplies e_index, the membership entry multiplies
// eps_index. No 1/sqrt(2) here; summing kron_like(A_0,0) + kron_like(A_1,1)
// reassembles column(ket).
KronColumn kron_like(const ObscureAmplitude& amp, int e_index);

// Elementwise (Hadamard-style) product of two amplitude pairs.
inline ObscureAmplitude hadamard_product(const ObscureAmplitude& x,
                                         const ObscureAmplitude& y) {
  return {x.a * y.a, x.alpha * y.alpha};
}

// [a_0, a_1 | alpha_0, alpha_1] without the global factor.
KronColumn column(const KroneckerQubit& ket);

// The physical column, including the global 1/sqrt(2).
KronColumn physical_column(const KroneckerQubit& ket);

// <bra|ket> = (1/2) * sum_i (a_i^bra* a_i^ket + alpha_i^bra alpha_i^ket):
// conjugate-linear in the bra's quantum part, bilinear in membership parts.
// Self inner product of a valid state is 1.
Complex inner(const KroneckerQubit& bra, const KroneckerQubit& ket);

// Inner product of a state with a raw column (e.g. a projection result). The
// bra contributes its 1/sqrt(2); the column is taken as-is.
Complex inner(const KroneckerQubit& bra, const KronColumn& ket);

// 4x4 density matrix (1/2) u w^T with u = (a0, a1, alpha0, alpha1) and
// w = (a0*, a1*, alpha0, alpha1): quantum entries conjugated in the column
// index, membership entries real. Rank one, det 0, unit trace for valid
// states — and therefore idempotent whenever the trace is 1.
Mat4c density4(const KroneckerQubit& ket);

// Builds the doubled state encoding a probability/membership pair:
//   a = (sqrt(p), sqrt(1-p))
//   alpha = (cos(pi mu/2), sin(pi mu/2))   under Arc (reads back as (mu, 1-mu))
//   alpha = (sqrt(mu), sqrt(1-mu))         under BornLike
// CircleSquare has no closed-form inverse and is rejected.
KroneckerQubit from_prob_membership(double p, double mu,
                                    MembershipModel model = MembershipModel::Arc);

// Membership functions of the state's membership amplitudes under `model`.
MembershipVector memberships(const KroneckerQubit& ket, MembershipModel model,
                             double tol = kDefaultTolerance);

// View a two-state product-form qudit with normalized membership amplitudes
// as a doubled state.
KroneckerQubit to_kronecker(const ObscureQudit& state,
                            double tol = kDefaultTolerance);

}  // namespace obsq
