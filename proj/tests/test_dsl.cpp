#include <cmath>
#include <string>
#include <variant>

#include "doctest.h"
#include "obsq/dsl.hpp"
#include "obsq/errors.hpp"
#include "obsq/report.hpp"

using namespace obsq;

namespace {

int syntax_line(const std::string& src) {
  try {
    parse_program(src);
  } catch (const SyntaxError& e) {
    return e.line();
  }
  return -1;
}

int semantic_line(const std::string& src) {
  try {
    parse_program(src);
  } catch (const SemanticError& e) {
    return e.line();
  }
  return -1;
}

const Json& section_payload(const Report& r, const std::string& kind,
                            std::size_t nth = 0) {
  std::size_t seen = 0;
  for (const ReportSection& s : r.sections) {
    if (s.kind != kind) continue;
    if (seen == nth) return s.payload;
    ++seen;
  }
  static const Json empty;
  REQUIRE_MESSAGE(false, "missing report section: " << kind);
  return empty;
}

double num(const Json& j) { return j.get<double>(); }

}  // namespace

TEST_CASE("a minimal script parses into three statements") {
  const Program p = parse_program(
      "model born\n"
      "qubit q pm 1/2 1/2\n"
      "report probs\n");
  REQUIRE(p.statements.size() == 3);
  CHECK(p.model == MembershipModel::BornLike);
  CHECK(std::holds_alternative<ModelStmt>(p.statements[0].node));
  CHECK(std::holds_alternative<DeclarePM>(p.statements[1].node));
  CHECK(std::holds_alternative<ReportStmt>(p.statements[2].node));
  CHECK(p.statements[1].line == 2);
}

TEST_CASE("the model defaults to arc and hoists when present") {
  CHECK(parse_program("qubit q pm 1 0\n").model == MembershipModel::Arc);
  CHECK(parse_program("model circle-square\nqubit q pm 1 0\n").model ==
        MembershipModel::CircleSquare);
  // Position does not matter for hoisting.
  CHECK(parse_program("qubit q pm 1 0\nmodel born\n").model ==
        MembershipModel::BornLike);
}

TEST_CASE("comments and blank lines vanish") {
  const Program p = parse_program(
      "# leading comment\n"
      "\n"
      "qubit q pm 1 0  # trailing comment\n"
      "\n"
      "report probs\n");
  CHECK(p.statements.size() == 2);
  CHECK(p.statements[0].line == 3);
  CHECK(p.statements[1].line == 5);
}

TEST_CASE("fraction and complex literals") {
  const Program p = parse_program(
      "qubit q amps (1/2,0) (-1/2,3/4) memb 1/4 -2/8\n");
  const auto& d = std::get<DeclareAmps>(p.statements[0].node);
  CHECK(d.a[0] == Complex(0.5, 0));
  CHECK(d.a[1] == Complex(-0.5, 0.75));
  CHECK(d.alpha[0] == 0.25);
  CHECK(d.alpha[1] == -0.25);
}

TEST_CASE("syntax errors carry exact positions") {
  try {
    parse_program("qubit q pm 1/2 oops\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 16);
    CHECK(e.expected() == "a number");
  }
  try {
    parse_program("qubit q pm 1/2 1/2\nqubit r pm 1/2 1/2 trailing\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 20);
    CHECK(e.expected() == "end of line");
  }
  try {
    parse_program("qubit q pm 1/0 0\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 14);  // the zero denominator
  }
  CHECK(syntax_line("banana q\n") == 1);
  CHECK(syntax_line("qubit q pm 1 2 ;\n") == 1);
  CHECK(syntax_line("qubit q amps (1,0 (0,0) memb 1 0\n") == 1);
  CHECK(syntax_line("report everything\n") == 1);
  CHECK(syntax_line("qubit q fancy 1 2\n") == 1);
  CHECK(syntax_line("qubit q pm 1.\n") == 1);
  CHECK(syntax_line("qubit q pm 1e 0\n") == 1);
}

TEST_CASE("semantic errors carry the statement line") {
  CHECK(semantic_line("model born\nmodel arc\nqubit q pm 1 0\n") == 2);
  CHECK(semantic_line("model tepid\n") == 1);
  CHECK(semantic_line("qubit q pm 1 0\nqubit q pm 0 1\n") == 2);
  CHECK(semantic_line("gate H on q\n") == 1);
  CHECK(semantic_line("project P0 on nobody\n") == 1);
  CHECK(semantic_line("qubit q pm 1 0\ngate warp on q\n") == 2);
  CHECK(semantic_line("qubit q pm 1 0\nproject P7 on q\n") == 2);
  // Budget: a register is two qubits.
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\nqubit c pm 1 0\n") ==
        3);
  CHECK(semantic_line("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n"
                      "qubit q pm 1 0\n") == 2);
  CHECK(semantic_line("qubit q pm 1 0\n"
                      "register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n") ==
        2);
  // Y on membership, and arity mismatches.
  CHECK(semantic_line("qubit q pm 1 0\ngate H/Y on q\n") == 2);
  CHECK(semantic_line("qubit q pm 1 0\ngate H/CNOT on q\n") == 2);
  CHECK(semantic_line("qubit q pm 1 0\ngate CNOT on q\n") == 2);
  // Registers take two-qubit gates only; projections never target registers.
  CHECK(semantic_line("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n"
                      "gate H on r\n") == 2);
  CHECK(semantic_line("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n"
                      "project P0 on r\n") == 2);
  CHECK(semantic_line("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n"
                      "pair r r\n") == 2);
  // Pair rules.
  CHECK(semantic_line("qubit a pm 1 0\npair a a\n") == 2);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a c\n") == 3);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a b\npair a b\n") ==
        4);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a b\n"
                      "gate H on a\n") == 4);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a b\n"
                      "project P0 on a\n") == 4);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a b\n"
                      "gate CNOT on b a\n") == 4);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\ngate CNOT on a b\n") ==
        3);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\ngate H on a b\n") == 3);
  // Reports need a subject.
  CHECK(semantic_line("report probs\n") == 1);
  CHECK(semantic_line("qubit a pm 1 0\nreport concurrence\n") == 2);
  CHECK(semantic_line("register r amps (1,0) (0,0) (0,0) (0,0) memb 1 0 0 0\n"
                      "report expect\n") == 2);
  CHECK(semantic_line("qubit a pm 1 0\nqubit b pm 1 0\npair a b\n"
                      "report density\n") == 4);
}

TEST_CASE("gate statements default the membership block to I") {
  const Program p = parse_program("qubit q pm 1 0\ngate H on q\n");
  const auto& g = std::get<GateStmt>(p.statements[1].node);
  CHECK(g.quantum == GateName::H);
  CHECK(g.membership == GateName::I);
  // The NOT alias lands as X.
  const Program p2 = parse_program("qubit q pm 1 0\ngate not/not on q\n");
  const auto& g2 = std::get<GateStmt>(p2.statements[1].node);
  CHECK(g2.quantum == GateName::X);
  CHECK(g2.membership == GateName::X);
}

TEST_CASE("render and parse form a fixed point") {
  const std::string sources[] = {
      "model born\nqubit q pm 1/2 1/2\nreport probs\n",
      "qubit q amps (0.6,0) (0,-0.8) memb 1 0\nreport memb\nreport expect\n",
      "qubit q bloch 1.5707963267948966 0 1.5707963267948966\nreport density\n",
      "model circle-square\nqubit q pm 0.25 0.75\ngate H/X on q\nreport memb\n",
      "qubit a pm 1 0\nqubit b pm 0 1\npair a b\ngate CNOT/CNOT on a b\n"
      "report concurrence\n",
      "register r amps (0.70710678118654752,0) (0,0) (0,0) "
      "(0.70710678118654752,0) memb 0.70710678118654752 0 0 "
      "0.70710678118654752\nreport probs\nreport concurrence\n",
      "qubit q pm 1/2 1/2\nproject P0 on q\nreport probs\ngate Z on q\n"
      "report probs\n",
  };
  for (const std::string& src : sources) {
    const Program once = parse_program(src);
    const std::string canon = render(once);
    const Program twice = parse_program(canon);
    CHECK(once == twice);
    CHECK(render(twice) == canon);
  }
}

TEST_CASE("execution reports born probabilities and memberships") {
  const Report r = execute(parse_program(
      "model born\n"
      "qubit q amps (0.6,0) (0,0.8) memb 0.8 0.6\n"
      "report probs\n"
      "report memb\n"));
  CHECK(r.model == "born");
  const Json& probs = section_payload(r, "probs");
  CHECK(probs["id"] == "q");
  CHECK(num(probs["values"][0]) == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(num(probs["values"][1]) == doctest::Approx(0.64).epsilon(1e-12));
  const Json& memb = section_payload(r, "memb");
  CHECK(memb["model"] == "born");
  CHECK(num(memb["values"][0]) == doctest::Approx(0.64).epsilon(1e-12));
  CHECK(num(memb["values"][1]) == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("pm declarations honor the active model") {
  // Identity word: the state comes back unchanged.
  const Report arc = execute(parse_program(
      "qubit q pm 1 0\ngate I/I on q\nreport probs\nreport memb\n"));
  CHECK(num(section_payload(arc, "probs")["values"][0]) == 1.0);
  CHECK(num(section_payload(arc, "memb")["values"][0]) == 0.0);
  CHECK(num(section_payload(arc, "memb")["values"][1]) == 1.0);

  // Same script under an override: the declaration now builds born-style
  // alphas (sqrt(mu), sqrt(1-mu)), and the readback is (mu, 1-mu) again.
  const Report born = execute(parse_program("qubit q pm 1 0\nreport memb\n"),
                              {MembershipModel::BornLike, kDefaultTolerance});
  CHECK(born.model == "born");
  CHECK(num(section_payload(born, "memb")["values"][0]) == 0.0);
  CHECK(num(section_payload(born, "memb")["values"][1]) == 1.0);
}

TEST_CASE("projection reports flag the state and scale consistently") {
  const Report r = execute(parse_program(
      "model born\n"
      "qubit q amps (0.6,0) (0.8,0) memb 0.6 0.8\n"
      "project P0 on q\n"
      "report probs\n"
      "report expect\n"));
  const Json& probs = section_payload(r, "probs");
  CHECK(probs["projected"] == true);
  CHECK(num(probs["values"][0]) == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(num(probs["values"][1]) == 0.0);
  const Json& expect = section_payload(r, "expect");
  // Half of the raw quadratic form: P0 keeps 0.36 in each sector.
  CHECK(num(expect["values"]["P0"]) == doctest::Approx(0.36).epsilon(1e-9));
  CHECK(num(expect["values"]["P1"]) == 0.0);
  CHECK(num(expect["values"]["Q0"]) == doctest::Approx(0.18).epsilon(1e-9));
  CHECK(num(expect["values"]["Q0mu"]) == doctest::Approx(0.18).epsilon(1e-9));
}

TEST_CASE("a gate after a projection renormalizes with a note") {
  const Report r = execute(parse_program(
      "model born\n"
      "qubit q amps (0.6,0) (0.8,0) memb 0.6 0.8\n"
      "project P0 on q\n"
      "gate X/X on q\n"
      "report probs\n"));
  REQUIRE(r.sections.size() == 2);
  CHECK(r.sections[0].kind == "note");
  CHECK(r.sections[0].payload["id"] == "q");
  CHECK(r.sections[0].payload["line"] == 4);
  const Json& probs = r.sections[1].payload;
  // P0 kept slot 0 only; renormalized to 1 and flipped to slot 1 by X.
  CHECK(num(probs["values"][0]) == 0.0);
  CHECK(num(probs["values"][1]) == 1.0);
  CHECK(!probs.contains("projected"));
}

TEST_CASE("pairing consumes the qubits and names the register") {
  const Report r = execute(parse_program(
      "model born\n"
      "qubit a pm 1 1\n"
      "qubit b pm 1 1\n"
      "pair a b\n"
      "gate CNOT/CNOT on a b\n"
      "report probs\n"
      "report concurrence\n"));
  // No per-qubit sections survive the pairing.
  const Json& probs = section_payload(r, "probs");
  CHECK(probs["id"] == "a*b");
  CHECK(num(probs["values"][0]) == 1.0);
  const Json& conc = section_payload(r, "concurrence");
  CHECK(conc["id"] == "a*b");
  CHECK(num(conc["c_q"]) == 0.0);
  CHECK(num(conc["c_mu"]) == 0.0);
}

TEST_CASE("bell word on a paired product halves the display value") {
  // tensor_two keeps a 1/sqrt(2) per sector, so the pair enters with squared
  // sector sums of 1/2; the H-then-CNOT word doubles |det| to 1/4 per sector
  // and the concurrences read 1/2 rather than the normalized-register 1.
  const Report r = execute(parse_program(
      "model born\n"
      "qubit a pm 1 1\n"
      "qubit b pm 1 1\n"
      "gate H/H on a\n"
      "pair a b\n"
      "gate CNOT/CNOT on a b\n"
      "report concurrence\n"));
  const Json& conc = section_payload(r, "concurrence");
  CHECK(num(conc["c_q"]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(num(conc["c_mu"]) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(num(conc["c_scal"]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("direct register entry reproduces the bell display") {
  const Report r = execute(parse_program(
      "model born\n"
      "register B amps (0.70710678118654752,0) (0,0) (0,0) "
      "(0.70710678118654752,0) memb 0.70710678118654752 0 0 "
      "0.70710678118654752\n"
      "report concurrence\n"));
  const Json& conc = section_payload(r, "concurrence");
  CHECK(num(conc["c_q"]) == 1.0);
  CHECK(num(conc["c_mu"]) == 1.0);
  CHECK(num(conc["c_scal"]) == 1.0);
}

TEST_CASE("register memberships require the born model") {
  const std::string src =
      "register B amps (0.70710678118654752,0) (0,0) (0,0) "
      "(0.70710678118654752,0) memb 0.70710678118654752 0 0 "
      "0.70710678118654752\n"
      "report memb\n";
  CHECK_THROWS_AS(execute(parse_program(src)), DomainError);
  try {
    execute(parse_program(src));
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).starts_with("line 2: "));
  }
  // ... while probabilities do not.
  const Report r = execute(parse_program(
      "register B amps (0.70710678118654752,0) (0,0) (0,0) "
      "(0.70710678118654752,0) memb 0.70710678118654752 0 0 "
      "0.70710678118654752\n"
      "report probs\n"));
  CHECK(num(section_payload(r, "probs")["values"][0]) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("execution failures carry the source line") {
  // Renormalizing a crossed projection of a basis state has no quantum mass.
  const std::string src =
      "qubit q pm 1 1\n"
      "project P10 on q\n"
      "gate X on q\n";
  try {
    execute(parse_program(src));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).starts_with("line 3: "));
  }
  // Arc memberships reject negative amplitudes at report time.
  const std::string neg =
      "qubit q amps (1,0) (0,0) memb 0.70710678118654752 "
      "-0.70710678118654752\nreport memb\n";
  try {
    execute(parse_program(neg));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).starts_with("line 2: "));
  }
}

TEST_CASE("execution is deterministic") {
  const std::string src =
      "model born\n"
      "qubit a pm 3/4 1/4\n"
      "qubit b bloch 0.7853981633974483 0.5 2.0943951023931953\n"
      "gate H/Z on a\n"
      "pair a b\n"
      "gate SWAP/SWAP on a b\n"
      "report probs\n"
      "report memb\n"
      "report concurrence\n";
  const Report first = execute(parse_program(src));
  const Report second = execute(parse_program(src));
  CHECK(first == second);
  CHECK(report_to_json(first) == report_to_json(second));
}
