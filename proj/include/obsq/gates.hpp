#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "obsq/entangle.hpp"
#include "obsq/kron_state.hpp"
#include "obsq/matrix.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

// The shipped gate set. NOT parses as an alias of X. I is
// arity-polymorphic: it adapts to the other slot of a pair and defaults to
// one qubit.
enum class GateName { I, H, X, Y, Z, CNOT, SWAP };

std::optional<GateName> parse_gate_name(std::string_view name);
std::string_view gate_name_str(GateName name);

// 1 for H/X/Y/Z, 2 for CNOT/SWAP, 0 (flexible) for I.
int gate_arity(GateName name);

// Single-qubit matrix of an arity-1 (or I) name.
Mat2c gate_matrix2(GateName name);

// Two-qubit matrix of I/CNOT/SWAP in basis order (00', 10', 01', 11');
// CNOT's control is the first (unprimed) qubit.
Mat4c gate_matrix4(GateName name);

// Real copies for the membership block; Y is rejected with RealnessError.
Mat2r real_gate_matrix2(GateName name);
Mat4r real_gate_matrix4(GateName name);

// The 4x4 two-qubit operator acting as `first` on the unprimed qubit and
// `second` on the primed one, in the register's flattening order.
template <typename Scalar>
Mat<Scalar, 4> two_qubit_from_single(const Mat<Scalar, 2>& first,
                                     const Mat<Scalar, 2>& second) {
  Mat<Scalar, 4> out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(i + 2 * j, k + 2 * l) = first(i, k) * second(j, l);
  return out;
}

template <std::size_t N>
struct GateBlocks {
  Mat<Complex, N> quantum;
  Mat<double, N> membership;
};

// A block-diagonal operator on the doubled space: a complex unitary paired
// with a real orthogonal matrix, acting on the quantum and membership
// sectors respectively. Only blocks can be supplied, so every instance is
// block-diagonal by construction; each block is validated (unitarity /
// orthogonality within tol) at construction.
class ObscureQuantumGate {
 public:
  ObscureQuantumGate(Mat2c quantum, Mat2r membership,
                     double tol = kDefaultTolerance);
  ObscureQuantumGate(Mat4c quantum, Mat4r membership,
                     double tol = kDefaultTolerance);

  int arity() const { return blocks_.index() == 0 ? 1 : 2; }

  const GateBlocks<2>& blocks2() const;
  const GateBlocks<4>& blocks4() const;

 private:
  std::variant<GateBlocks<2>, GateBlocks<4>> blocks_;
};

// Builds a gate from a (quantum, membership) name pair. Y in the membership
// slot raises RealnessError; incompatible arities raise ArityError.
ObscureQuantumGate make_gate(GateName quantum, GateName membership,
                             double tol = kDefaultTolerance);

// Same, from names; unknown names raise NameError.
ObscureQuantumGate make_gate(std::string_view quantum,
                             std::string_view membership,
                             double tol = kDefaultTolerance);

// Blockwise product: quantum blocks multiply, membership blocks multiply.
// Arities must match (ArityError).
ObscureQuantumGate compose(const ObscureQuantumGate& g1,
                           const ObscureQuantumGate& g2,
                           double tol = kDefaultTolerance);

// U on the quantum pair, U_mu on the membership pair. Norm sums are
// preserved, so the result revalidates; membership amplitudes may come out
// negative.
KroneckerQubit apply(const ObscureQuantumGate& gate, const KroneckerQubit& ket,
                     double tol = kDefaultTolerance);

// Two-qubit action on a register's flattened sectors.
TwoQubitRegister apply2(const ObscureQuantumGate& gate,
                        const TwoQubitRegister& reg,
                        double tol = kDefaultTolerance);

}  // namespace obsq
