#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "obsq/kron_state.hpp"
#include "obsq/matrix.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

// The eight named block-diagonal projections on the doubled space. P-family
// operators keep one index per block; Q-family ("half") operators keep one
// block entirely and kill the other. The mu suffix marks the membership-only
// halves.
enum class ProjectionName { P0, P1, P01, P10, Q0, Q1, Q0mu, Q1mu };

std::optional<ProjectionName> parse_projection_name(std::string_view name);
std::string_view projection_name_str(ProjectionName name);

// Block-diagonal operator diag(Pq | Pm) where each block is a diagonal 0/1
// matrix. Closed under products (which simply AND the diagonals) and
// contains the zero operator; sums are provided for completeness checks.
class DoubleProjection {
 public:
  explicit DoubleProjection(ProjectionName name);
  DoubleProjection(std::array<double, 2> quantum_diag,
                   std::array<double, 2> membership_diag);

  std::array<double, 2> quantum_diag() const { return q_; }
  std::array<double, 2> membership_diag() const { return m_; }

  // The canonical name if the operator is one of the shipped eight.
  std::optional<ProjectionName> name() const;
  bool is_zero() const;

  // Dense 4x4 rendering, for display and table checks only; arithmetic stays
  // on the diagonals.
  Mat4r dense() const;

  friend DoubleProjection operator*(const DoubleProjection& lhs,
                                    const DoubleProjection& rhs) {
    return DoubleProjection({lhs.q_[0] * rhs.q_[0], lhs.q_[1] * rhs.q_[1]},
                            {lhs.m_[0] * rhs.m_[0], lhs.m_[1] * rhs.m_[1]});
  }

  friend DoubleProjection operator+(const DoubleProjection& lhs,
                                    const DoubleProjection& rhs) {
    return DoubleProjection({lhs.q_[0] + rhs.q_[0], lhs.q_[1] + rhs.q_[1]},
                            {lhs.m_[0] + rhs.m_[0], lhs.m_[1] + rhs.m_[1]});
  }

  bool operator==(const DoubleProjection&) const = default;

 private:
  std::array<double, 2> q_{};
  std::array<double, 2> m_{};
};

// {P0, P1}: same index kept in both blocks.
std::pair<DoubleProjection, DoubleProjection> standard_projections();

// {P01, P10}: crossed indices (quantum 0 with membership 1, and vice versa).
std::pair<DoubleProjection, DoubleProjection> crossed_projections();

// {Q0, Q1, Q0mu, Q1mu}: quantum-only and membership-only halves. They sum to
// the identity on the doubled space.
std::array<DoubleProjection, 4> half_projections();

DoubleProjection projection(ProjectionName name);

// Blockwise action on the physical column of the state (the global 1/sqrt(2)
// is included). The result is a raw, generally unnormalized column.
KronColumn apply(const DoubleProjection& p, const KroneckerQubit& ket);

// Blockwise action on a raw column (for chaining projections).
KronColumn apply(const DoubleProjection& p, const KronColumn& col);

// <ket|P|ket> = (1/2) (sum_i Pq_i |a_i|^2 + sum_i Pm_i alpha_i^2).
double expectation(const DoubleProjection& p, const KroneckerQubit& ket);

// Same quadratic form evaluated on a raw column (no extra 1/sqrt(2)).
double expectation(const DoubleProjection& p, const KronColumn& col);

// Rescales each sector of a projected column independently to unit 2-norm
// and reassembles a valid state. A zero sector cannot be renormalized and
// raises DomainError.
KroneckerQubit renormalize_sectors(const KronColumn& col,
                                   double tol = kDefaultTolerance);

}  // namespace obsq
