#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "obsq/gates.hpp"
#include "obsq/membership.hpp"
#include "obsq/numeric.hpp"
#include "obsq/projections.hpp"
#include "obsq/report.hpp"

namespace obsq {

// Script statements, one per line. Amplitude vectors follow the flattening
// order used everywhere else: single qubits (index 0, index 1), registers
// (00', 10', 01', 11').

struct ModelStmt {
  MembershipModel model{};
  bool operator==(const ModelStmt&) const = default;
};

struct DeclareAmps {
  std::string id;
  std::array<Complex, 2> a{};
  std::array<double, 2> alpha{};
  bool operator==(const DeclareAmps&) const = default;
};

struct DeclareBloch {
  std::string id;
  double theta{};
  double phi{};
  double theta_mu{};
  bool operator==(const DeclareBloch&) const = default;
};

struct DeclarePM {
  std::string id;
  double p{};
  double mu{};
  bool operator==(const DeclarePM&) const = default;
};

struct DeclareRegister {
  std::string id;
  std::array<Complex, 4> b{};
  std::array<double, 4> beta{};
  bool operator==(const DeclareRegister&) const = default;
};

// `gate H/X on q0` — quantum name / membership name (membership defaults to
// I when the slash form is omitted). One target for single qubits or a
// declared register, two targets for a paired couple.
struct GateStmt {
  GateName quantum{};
  GateName membership{};
  std::vector<std::string> targets;
  bool operator==(const GateStmt&) const = default;
};

struct ProjectStmt {
  ProjectionName proj{};
  std::string target;
  bool operator==(const ProjectStmt&) const = default;
};

struct PairStmt {
  std::string first;
  std::string second;
  bool operator==(const PairStmt&) const = default;
};

enum class ReportKind { Probs, Memb, Density, Expect, Concurrence };

std::string_view report_kind_str(ReportKind kind);

struct ReportStmt {
  ReportKind kind{};
  bool operator==(const ReportStmt&) const = default;
};

using StatementNode =
    std::variant<ModelStmt, DeclareAmps, DeclareBloch, DeclarePM,
                 DeclareRegister, GateStmt, ProjectStmt, PairStmt, ReportStmt>;

struct Statement {
  int line{};
  StatementNode node;

  // Structural equality; source position is irrelevant.
  bool operator==(const Statement& rhs) const { return node == rhs.node; }
};

struct Program {
  // Hoisted from the (at most one) model statement; arc when absent. The
  // statement itself stays in the list so rendering preserves it.
  MembershipModel model = MembershipModel::Arc;
  std::vector<Statement> statements;

  bool operator==(const Program&) const = default;
};

// Parses a full script. Grammar violations raise SyntaxError (line, column,
// expected/got); statically detectable meaning problems — undeclared or
// duplicate identifiers, qubit budget, arity and target mismatches, reports
// with no subject — raise SemanticError (line). A returned Program is safe
// to execute up to numeric errors.
Program parse_program(std::string_view source);

// Canonical text form: one statement per line, %.17g numbers, membership
// gate always written. parse(render(p)) == p.
std::string render(const Program& program);

struct ExecuteOptions {
  std::optional<MembershipModel> model_override;
  double tolerance = kDefaultTolerance;
};

// Runs the statements in order; every `report` appends sections (one per
// live subject). Numeric failures surface as DomainError prefixed with the
// source line. Deterministic: equal programs yield equal reports.
Report execute(const Program& program, const ExecuteOptions& options = {});

}  // namespace obsq
