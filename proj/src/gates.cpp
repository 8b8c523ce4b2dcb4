#include "obsq/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "obsq/errors.hpp"

namespace obsq {
namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

template <std::size_t N>
void check_unitary(const Mat<Complex, N>& u, double tol) {
  if (max_abs_diff(adjoint(u) * u, Mat<Complex, N>::identity()) > tol)
    throw DomainError("quantum block is not unitary");
}

template <std::size_t N>
void check_orthogonal(const Mat<double, N>& m, double tol) {
  if (max_abs_diff(m.transpose() * m, Mat<double, N>::identity()) > tol)
    throw DomainError("membership block is not orthogonal");
}

template <std::size_t N>
Mat<double, N> real_part_of(const Mat<Complex, N>& m) {
  Mat<double, N> out;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out(r, c) = m(r, c).real();
  return out;
}

}  // namespace

std::optional<GateName> parse_gate_name(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "I") return GateName::I;
  if (upper == "H") return GateName::H;
  if (upper == "X" || upper == "NOT") return GateName::X;
  if (upper == "Y") return GateName::Y;
  if (upper == "Z") return GateName::Z;
  if (upper == "CNOT") return GateName::CNOT;
  if (upper == "SWAP") return GateName::SWAP;
  return std::nullopt;
}

std::string_view gate_name_str(GateName name) {
  switch (name) {
    case GateName::I: return "I";
    case GateName::H: return "H";
    case GateName::X: return "X";
    case GateName::Y: return "Y";
    case GateName::Z: return "Z";
    case GateName::CNOT: return "CNOT";
    case GateName::SWAP: return "SWAP";
  }
  return "I";
}

int gate_arity(GateName name) {
  switch (name) {
    case GateName::I: return 0;
    case GateName::CNOT:
    case GateName::SWAP: return 2;
    default: return 1;
  }
}

Mat2c gate_matrix2(GateName name) {
  Mat2c m;
  switch (name) {
    case GateName::I:
      return Mat2c::identity();
    case GateName::H:
      m(0, 0) = kInvSqrt2;
      m(0, 1) = kInvSqrt2;
      m(1, 0) = kInvSqrt2;
      m(1, 1) = -kInvSqrt2;
      return m;
    case GateName::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    case GateName::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      return m;
    case GateName::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      return m;
    case GateName::CNOT:
    case GateName::SWAP:
      break;
  }
  throw ArityError("two-qubit gate used in a single-qubit slot");
}

Mat4c gate_matrix4(GateName name) {
  Mat4c m;
  switch (name) {
    case GateName::I:
      return Mat4c::identity();
    case GateName::CNOT:
      // |i j'> -> |i, j' xor i> on flat index i + 2j'.
      m(0, 0) = 1.0;
      m(3, 1) = 1.0;
      m(2, 2) = 1.0;
      m(1, 3) = 1.0;
      return m;
    case GateName::SWAP:
      m(0, 0) = 1.0;
      m(2, 1) = 1.0;
      m(1, 2) = 1.0;
      m(3, 3) = 1.0;
      return m;
    default:
      break;
  }
  throw ArityError("single-qubit gate used in a two-qubit slot");
}

Mat2r real_gate_matrix2(GateName name) {
  if (name == GateName::Y)
    throw RealnessError("Y is complex and cannot act on membership amplitudes");
  return real_part_of(gate_matrix2(name));
}

Mat4r real_gate_matrix4(GateName name) {
  if (name == GateName::Y)
    throw RealnessError("Y is complex and cannot act on membership amplitudes");
  return real_part_of(gate_matrix4(name));
}

ObscureQuantumGate::ObscureQuantumGate(Mat2c quantum, Mat2r membership,
                                       double tol)
    : blocks_(GateBlocks<2>{quantum, membership}) {
  check_unitary(quantum, tol);
  check_orthogonal(membership, tol);
}

ObscureQuantumGate::ObscureQuantumGate(Mat4c quantum, Mat4r membership,
                                       double tol)
    : blocks_(GateBlocks<4>{quantum, membership}) {
  check_unitary(quantum, tol);
  check_orthogonal(membership, tol);
}

const GateBlocks<2>& ObscureQuantumGate::blocks2() const {
  if (arity() != 1) throw ArityError("expected a single-qubit gate");
  return std::get<GateBlocks<2>>(blocks_);
}

const GateBlocks<4>& ObscureQuantumGate::blocks4() const {
  if (arity() != 2) throw ArityError("expected a two-qubit gate");
  return std::get<GateBlocks<4>>(blocks_);
}

ObscureQuantumGate make_gate(GateName quantum, GateName membership,
                             double tol) {
  if (membership == GateName::Y)
    throw RealnessError("Y is complex and cannot act on membership amplitudes");
  const int aq = gate_arity(quantum);
  const int am = gate_arity(membership);
  if (aq != 0 && am != 0 && aq != am)
    throw ArityError(std::string("gate arity mismatch: ") +
                     std::string(gate_name_str(quantum)) + " / " +
                     std::string(gate_name_str(membership)));
  const int arity = std::max({aq, am, 1});
  if (arity == 1)
    return ObscureQuantumGate(gate_matrix2(quantum),
                              real_gate_matrix2(membership), tol);
  return ObscureQuantumGate(gate_matrix4(quantum),
                            real_gate_matrix4(membership), tol);
}

ObscureQuantumGate make_gate(std::string_view quantum,
                             std::string_view membership, double tol) {
  const auto q = parse_gate_name(quantum);
  if (!q) throw NameError("unknown gate name: " + std::string(quantum));
  const auto m = parse_gate_name(membership);
  if (!m) throw NameError("unknown gate name: " + std::string(membership));
  return make_gate(*q, *m, tol);
}

ObscureQuantumGate compose(const ObscureQuantumGate& g1,
                           const ObscureQuantumGate& g2, double tol) {
  if (g1.arity() != g2.arity())
    throw ArityError("cannot compose gates of different arity");
  if (g1.arity() == 1) {
    const GateBlocks<2>& b1 = g1.blocks2();
    const GateBlocks<2>& b2 = g2.blocks2();
    return ObscureQuantumGate(b1.quantum * b2.quantum,
                              b1.membership * b2.membership, tol);
  }
  const GateBlocks<4>& b1 = g1.blocks4();
  const GateBlocks<4>& b2 = g2.blocks4();
  return ObscureQuantumGate(b1.quantum * b2.quantum,
                            b1.membership * b2.membership, tol);
}

KroneckerQubit apply(const ObscureQuantumGate& gate, const KroneckerQubit& ket,
                     double tol) {
  const GateBlocks<2>& blocks = gate.blocks2();
  const std::array<Complex, 2> q = blocks.quantum * ket.quantum();
  const std::array<double, 2> m = blocks.membership * ket.membership();
  return KroneckerQubit({q[0], m[0]}, {q[1], m[1]}, tol);
}

TwoQubitRegister apply2(const ObscureQuantumGate& gate,
                        const TwoQubitRegister& reg, double tol) {
  const GateBlocks<4>& blocks = gate.blocks4();
  const std::array<Complex, 4> b = blocks.quantum * reg.b_vector();
  const std::array<double, 4> beta = blocks.membership * reg.beta_vector();
  (void)tol;
  return TwoQubitRegister::from_vectors(b, beta, reg.normalized());
}

}  // namespace obsq
