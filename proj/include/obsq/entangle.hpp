#pragma once

#include <array>
#include <utility>

#include "obsq/kron_state.hpp"
#include "obsq/matrix.hpp"
#include "obsq/membership.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

// A two-qubit doubled register: complex amplitudes b_{ij'} and real
// membership amplitudes beta_{ij'}, each a 2x2 matrix indexed by (first
// qubit, second qubit). The canonical flattening order is
// (00', 10', 01', 11') — first index varies fastest.
//
// The validating constructor enforces sum |b|^2 = 1 and sum beta^2 = 1
// within tol. Products built by tensor_two carry an extra 1/sqrt(2) per
// sector and are therefore created through the unnormalized escape hatch.
class TwoQubitRegister {
 public:
  TwoQubitRegister(Mat2c b, Mat2r beta, double tol = kDefaultTolerance);

  static TwoQubitRegister unnormalized(Mat2c b, Mat2r beta);

  const Mat2c& b() const { return b_; }
  const Mat2r& beta() const { return beta_; }
  bool normalized() const { return normalized_; }

  std::array<Complex, 4> b_vector() const;   // (00', 10', 01', 11')
  std::array<double, 4> beta_vector() const;

  static TwoQubitRegister from_vectors(const std::array<Complex, 4>& b,
                                       const std::array<double, 4>& beta,
                                       bool normalized);

 private:
  TwoQubitRegister(Mat2c b, Mat2r beta, bool normalized, int /*tag*/);

  Mat2c b_;
  Mat2r beta_;
  bool normalized_;
};

struct SeparabilityFlags {
  bool quantum{};
  bool membership{};
  bool operator==(const SeparabilityFlags&) const = default;
};

struct Concurrence {
  double c_q{};
  double c_mu{};
  double c_scal{};
};

struct RegisterReport {
  std::array<double, 4> probabilities{};  // (00', 10', 01', 11')
  std::array<double, 4> memberships{};
};

// Product register: b_{ij'} = a_i a_{j'} / sqrt(2), beta_{ij'} =
// alpha_i alpha_{j'} / sqrt(2). Always sector-separable; returned
// unnormalized (each squared sector sums to 1/2 by construction).
TwoQubitRegister tensor_two(const KroneckerQubit& x, const KroneckerQubit& y);

// A sector factorizes into a product of single-qubit amplitudes iff its 2x2
// determinant vanishes.
SeparabilityFlags is_separable(const TwoQubitRegister& reg,
                               double tol = kDefaultTolerance);

// (c_q, c_mu) = (2|det b|, 2|det beta|).
std::pair<double, double> vector_concurrence(const TwoQubitRegister& reg);

// Root-mean-square of the two sector concurrences:
// sqrt((c_q^2 + c_mu^2) / 2).
double scalar_concurrence(const TwoQubitRegister& reg);

Concurrence concurrence(const TwoQubitRegister& reg);

// Outcome table in basis order (00', 10', 01', 11'): probabilities
// |b|^2 normalized by their sum, memberships beta^2 normalized by their sum
// (both divisors are 1 within tolerance for validated registers). Only the
// BornLike model extends to four outcomes.
RegisterReport register_report(const TwoQubitRegister& reg,
                               MembershipModel model);

}  // namespace obsq
