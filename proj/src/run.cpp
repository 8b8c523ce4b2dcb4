#include "obsq/run.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "obsq/dsl.hpp"
#include "obsq/entangle.hpp"
#include "obsq/errors.hpp"
#include "obsq/gates.hpp"
#include "obsq/kron_state.hpp"
#include "obsq/obscure_state.hpp"
#include "obsq/projections.hpp"
#include "obsq/report.hpp"

namespace obsq {

int run_source(const std::string& source, const RunOptions& options,
               std::ostream& out, std::ostream& err) {
  Program prog;
  try {
    prog = parse_program(source);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SemanticError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    ExecuteOptions exec_options;
    exec_options.model_override = options.model_override;
    exec_options.tolerance = options.tolerance;
    const Report report = execute(prog, exec_options);
    if (options.format == OutputFormat::Json)
      out << report_to_json(report).dump(2) << "\n";
    else
      out << to_text(report);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_script(const std::string& path, const RunOptions& options,
               std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return 1;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_source(buf.str(), options, out, err);
}

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

KroneckerQubit random_ket(std::mt19937_64& rng,
                          std::normal_distribution<double>& gauss) {
  while (true) {
    const double re0 = gauss(rng);
    const double im0 = gauss(rng);
    const double re1 = gauss(rng);
    const double im1 = gauss(rng);
    const double m0 = gauss(rng);
    const double m1 = gauss(rng);
    const double qn =
        std::sqrt(re0 * re0 + im0 * im0 + re1 * re1 + im1 * im1);
    const double mn = std::sqrt(m0 * m0 + m1 * m1);
    if (qn < 1e-6 || mn < 1e-6) continue;
    return KroneckerQubit({Complex(re0 / qn, im0 / qn), m0 / mn},
                          {Complex(re1 / qn, im1 / qn), m1 / mn});
  }
}

// norm(pi/2, *, pi/2) bottoms out at 1/2; everywhere on the grid the direct
// sum matches the cosine closed form.
bool check_norm_extremum() {
  const ObscureQudit mid = from_bloch({kPi / 2, 0.0, kPi / 2});
  if (std::abs(mid.norm() - 0.5) > 1e-12) return false;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j) {
      const double theta = kPi * i / 49.0;
      const double theta_mu = kPi * j / 49.0;
      const double phi = 0.13 * (i + 7 * j);
      const ObscureQudit s = from_bloch({theta, phi, theta_mu});
      const double closed = 0.5 + 0.25 * std::cos(theta + theta_mu) +
                            0.25 * std::cos(theta - theta_mu);
      if (std::abs(s.norm() - closed) > 1e-12) return false;
    }
  return true;
}

// |00'> pushed through (H x I) then CNOT in both sectors is maximally
// entangled twice over: concurrences (1, 1) and scalar 1.
bool check_bell_concurrence() {
  const ObscureQuantumGate spread(
      two_qubit_from_single(gate_matrix2(GateName::H),
                            gate_matrix2(GateName::I)),
      two_qubit_from_single(real_gate_matrix2(GateName::H),
                            real_gate_matrix2(GateName::I)));
  const ObscureQuantumGate entangler =
      make_gate(GateName::CNOT, GateName::CNOT);
  Mat2c b;
  Mat2r beta;
  b(0, 0) = 1.0;
  beta(0, 0) = 1.0;
  TwoQubitRegister reg(b, beta);
  reg = apply2(entangler, apply2(spread, reg));
  const auto [c_q, c_mu] = vector_concurrence(reg);
  if (std::abs(c_q - 1.0) > 1e-12 || std::abs(c_mu - 1.0) > 1e-12)
    return false;
  return std::abs(scalar_concurrence(reg) - 1.0) <= 1e-12;
}

// The pinned partially-entangled register: rational outcome table, published
// concurrence pair to three decimals, and the exact radical for the scalar.
bool check_partial_entanglement_report() {
  Mat2c b;
  Mat2r beta;
  b(0, 0) = 0.5;
  b(1, 0) = 0.25;
  b(0, 1) = std::sqrt(3.0) / 4.0;
  b(1, 1) = kInvSqrt2;
  beta(0, 0) = kInvSqrt2;
  beta(1, 0) = std::sqrt(5.0) / 4.0;
  beta(0, 1) = kInvSqrt2 / 2.0;
  beta(1, 1) = 0.25;
  const TwoQubitRegister reg(b, beta);
  const RegisterReport rr = register_report(reg, MembershipModel::BornLike);
  const std::array<double, 4> p_want = {1.0 / 4, 1.0 / 16, 3.0 / 16, 1.0 / 2};
  const std::array<double, 4> mu_want = {1.0 / 2, 5.0 / 16, 1.0 / 8,
                                         1.0 / 16};
  for (std::size_t k = 0; k < 4; ++k) {
    if (std::abs(rr.probabilities[k] - p_want[k]) > 1e-12) return false;
    if (std::abs(rr.memberships[k] - mu_want[k]) > 1e-12) return false;
  }
  const Concurrence c = concurrence(reg);
  if (std::abs(c.c_q - 0.491) > 5e-4) return false;
  if (std::abs(c.c_mu - 0.042) > 5e-4) return false;
  if (std::abs(c.c_scal - 0.348) > 5e-4) return false;
  const double radical =
      std::sqrt(53.0 / 128 - std::sqrt(5.0) / 16 - std::sqrt(6.0) / 16);
  return std::abs(c.c_scal - radical) <= 1e-12;
}

// Full 8x8 product table of the named projections; -1 marks the zero
// operator, other entries index the operand order below.
bool check_projection_algebra() {
  constexpr ProjectionName kAll[8] = {
      ProjectionName::P0,  ProjectionName::P1,  ProjectionName::P01,
      ProjectionName::P10, ProjectionName::Q0,  ProjectionName::Q1,
      ProjectionName::Q0mu, ProjectionName::Q1mu};
  constexpr int kProducts[8][8] = {
      {0, -1, 4, 6, 4, -1, 6, -1},
      {-1, 1, 7, 5, -1, 5, -1, 7},
      {4, 7, 2, -1, 4, -1, -1, 7},
      {6, 5, -1, 3, -1, 5, 6, -1},
      {4, -1, 4, -1, 4, -1, -1, -1},
      {-1, 5, -1, 5, -1, 5, -1, -1},
      {6, -1, -1, 6, -1, -1, 6, -1},
      {-1, 7, 7, -1, -1, -1, -1, 7},
  };
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      const DoubleProjection product =
          projection(kAll[r]) * projection(kAll[c]);
      if (kProducts[r][c] < 0) {
        if (!product.is_zero()) return false;
      } else if (!(product == projection(kAll[kProducts[r][c]]))) {
        return false;
      }
    }
  return true;
}

// Full projections decompose into their halves on random states, and the
// standard pair resolves the identity.
bool check_expectation_identities() {
  std::mt19937_64 rng(0x51ab5u);
  std::normal_distribution<double> gauss;
  const auto [p0, p1] = standard_projections();
  const auto [p01, p10] = crossed_projections();
  const auto halves = half_projections();
  for (int n = 0; n < 1000; ++n) {
    const KroneckerQubit ket = random_ket(rng, gauss);
    const double q0 = expectation(halves[0], ket);
    const double q1 = expectation(halves[1], ket);
    const double q0m = expectation(halves[2], ket);
    const double q1m = expectation(halves[3], ket);
    if (std::abs(expectation(p0, ket) - (q0 + q0m)) > 1e-12) return false;
    if (std::abs(expectation(p1, ket) - (q1 + q1m)) > 1e-12) return false;
    if (std::abs(expectation(p01, ket) - (q0 + q1m)) > 1e-12) return false;
    if (std::abs(expectation(p10, ket) - (q1 + q0m)) > 1e-12) return false;
    if (std::abs(expectation(p0, ket) + expectation(p1, ket) - 1.0) > 1e-12)
      return false;
  }
  return true;
}

// H over the quantum block with NOT over the membership block sends E_0 to
// quantum (1/sqrt2, 1/sqrt2), membership (0, 1).
bool check_gate_hadamard_not() {
  const KroneckerQubit out =
      apply(make_gate(GateName::H, GateName::X), KroneckerQubit::basis(0));
  return std::abs(out.A0().a - Complex(kInvSqrt2)) <= 1e-12 &&
         std::abs(out.A1().a - Complex(kInvSqrt2)) <= 1e-12 &&
         std::abs(out.A0().alpha) <= 1e-12 &&
         std::abs(out.A1().alpha - 1.0) <= 1e-12;
}

}  // namespace

int selfcheck(std::ostream& out) {
  const struct {
    const char* name;
    bool (*fn)();
  } items[] = {
      {"norm-extremum", check_norm_extremum},
      {"bell-concurrence", check_bell_concurrence},
      {"partial-entanglement-report", check_partial_entanglement_report},
      {"projection-algebra", check_projection_algebra},
      {"expectation-identities", check_expectation_identities},
      {"gate-hadamard-not", check_gate_hadamard_not},
  };
  int failures = 0;
  for (const auto& item : items) {
    bool ok = false;
    try {
      ok = item.fn();
    } catch (const std::exception&) {
      ok = false;
    }
    out << (ok ? "[PASS] " : "[FAIL] ") << item.name << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace obsq
