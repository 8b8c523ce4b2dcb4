#include "obsq/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "obsq/entangle.hpp"
#include "obsq/errors.hpp"
#include "obsq/kron_state.hpp"
#include "obsq/obscure_state.hpp"

namespace obsq {

std::string_view report_kind_str(ReportKind kind) {
  switch (kind) {
    case ReportKind::Probs: return "probs";
    case ReportKind::Memb: return "memb";
    case ReportKind::Density: return "density";
    case ReportKind::Expect: return "expect";
    case ReportKind::Concurrence: return "concurrence";
  }
  return "probs";
}

namespace {

// ---------------------------------------------------------------- lexer --

enum class TokKind { Name, Number, LParen, RParen, Comma, Slash, Newline, End };

struct Token {
  TokKind kind;
  std::string text;
  double value{};
  int line{};
  int col{};
};

bool name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
// '-' continues a name so model names like "circle-square" stay one token;
// a leading '-' still starts a number.
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> toks;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '#') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      toks.push_back({TokKind::Newline, "\\n", 0, line, col});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '(') {
      toks.push_back({TokKind::LParen, "(", 0, line, col});
      ++i;
      ++col;
      continue;
    }
    if (c == ')') {
      toks.push_back({TokKind::RParen, ")", 0, line, col});
      ++i;
      ++col;
      continue;
    }
    if (c == ',') {
      toks.push_back({TokKind::Comma, ",", 0, line, col});
      ++i;
      ++col;
      continue;
    }
    if (c == '/') {
      toks.push_back({TokKind::Slash, "/", 0, line, col});
      ++i;
      ++col;
      continue;
    }
    if (name_start(c)) {
      std::size_t j = i;
      while (j < n && name_char(src[j])) ++j;
      toks.push_back(
          {TokKind::Name, std::string(src.substr(i, j - i)), 0, line, col});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' || is_digit(c)) {
      const int tl = line;
      const int tc = col;
      std::size_t j = i;
      if (src[j] == '-') ++j;
      const std::size_t int_start = j;
      while (j < n && is_digit(src[j])) ++j;
      if (j == int_start)
        throw SyntaxError(tl, tc, "a number", std::string(1, c));
      if (j < n && src[j] == '.') {
        ++j;
        const std::size_t frac_start = j;
        while (j < n && is_digit(src[j])) ++j;
        if (j == frac_start)
          throw SyntaxError(tl, tc, "digits after the decimal point",
                            std::string(src.substr(i, j - i)));
      }
      if (j < n && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
        const std::size_t exp_start = k;
        while (k < n && is_digit(src[k])) ++k;
        if (k == exp_start)
          throw SyntaxError(tl, tc, "exponent digits",
                            std::string(src.substr(i, k - i)));
        j = k;
      }
      std::string text(src.substr(i, j - i));
      const double v = std::strtod(text.c_str(), nullptr);
      if (!std::isfinite(v)) throw SyntaxError(tl, tc, "a finite number", text);
      toks.push_back({TokKind::Number, std::move(text), v, tl, tc});
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    throw SyntaxError(line, col, "a valid token",
                      "'" + std::string(1, c) + "'");
  }
  toks.push_back({TokKind::End, "", 0, line, col});
  return toks;
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokKind::Newline: return "end of line";
    case TokKind::End: return "end of input";
    default: return "'" + tok.text + "'";
  }
}

// --------------------------------------------------------------- parser --

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Program run() {
    Program prog;
    skip_newlines();
    while (peek().kind != TokKind::End) {
      const int line = peek().line;
      StatementNode node = parse_statement();
      end_of_line();
      prog.statements.push_back({line, std::move(node)});
      skip_newlines();
    }
    analyze(prog);
    return prog;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  Token expect(TokKind kind, const std::string& what) {
    const Token& tok = peek();
    if (tok.kind != kind)
      throw SyntaxError(tok.line, tok.col, what, describe(tok));
    ++pos_;
    return tok;
  }

  Token expect_name(const std::string& what) {
    return expect(TokKind::Name, what);
  }

  void expect_keyword(const std::string& kw) {
    const Token tok = expect_name("'" + kw + "'");
    if (tok.text != kw)
      throw SyntaxError(tok.line, tok.col, "'" + kw + "'", "'" + tok.text + "'");
  }

  bool accept(TokKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void skip_newlines() {
    while (peek().kind == TokKind::Newline) ++pos_;
  }

  void end_of_line() {
    const Token& tok = peek();
    if (tok.kind == TokKind::End) return;
    if (tok.kind == TokKind::Newline) {
      ++pos_;
      return;
    }
    throw SyntaxError(tok.line, tok.col, "end of line", describe(tok));
  }

  double parse_real() {
    const Token num = expect(TokKind::Number, "a number");
    double v = num.value;
    if (accept(TokKind::Slash)) {
      const Token den = expect(TokKind::Number, "a denominator");
      if (den.value == 0.0)
        throw SyntaxError(den.line, den.col, "a nonzero denominator",
                          "'" + den.text + "'");
      v /= den.value;
      if (!std::isfinite(v))
        throw SyntaxError(num.line, num.col, "a finite number",
                          "'" + num.text + "/" + den.text + "'");
    }
    return v;
  }

  Complex parse_complex() {
    expect(TokKind::LParen, "'('");
    const double re = parse_real();
    expect(TokKind::Comma, "','");
    const double im = parse_real();
    expect(TokKind::RParen, "')'");
    return Complex(re, im);
  }

  StatementNode parse_statement() {
    const Token kw = expect_name("a statement keyword");
    if (kw.text == "model") return parse_model();
    if (kw.text == "qubit") return parse_qubit();
    if (kw.text == "register") return parse_register();
    if (kw.text == "gate") return parse_gate();
    if (kw.text == "project") return parse_project();
    if (kw.text == "pair") return parse_pair();
    if (kw.text == "report") return parse_report();
    throw SyntaxError(
        kw.line, kw.col,
        "a statement keyword (model, qubit, register, gate, project, pair, "
        "report)",
        "'" + kw.text + "'");
  }

  StatementNode parse_model() {
    const Token name = expect_name("a membership model name");
    const auto model = parse_membership_model(name.text);
    if (!model)
      throw SemanticError(name.line,
                          "unknown membership model '" + name.text + "'");
    return ModelStmt{*model};
  }

  StatementNode parse_qubit() {
    const Token id = expect_name("a qubit identifier");
    const Token form = expect_name("'amps', 'bloch', or 'pm'");
    if (form.text == "amps") {
      DeclareAmps d;
      d.id = id.text;
      d.a[0] = parse_complex();
      d.a[1] = parse_complex();
      expect_keyword("memb");
      d.alpha[0] = parse_real();
      d.alpha[1] = parse_real();
      return d;
    }
    if (form.text == "bloch") {
      DeclareBloch d;
      d.id = id.text;
      d.theta = parse_real();
      d.phi = parse_real();
      d.theta_mu = parse_real();
      return d;
    }
    if (form.text == "pm") {
      DeclarePM d;
      d.id = id.text;
      d.p = parse_real();
      d.mu = parse_real();
      return d;
    }
    throw SyntaxError(form.line, form.col, "'amps', 'bloch', or 'pm'",
                      "'" + form.text + "'");
  }

  StatementNode parse_register() {
    DeclareRegister d;
    d.id = expect_name("a register identifier").text;
    expect_keyword("amps");
    for (std::size_t k = 0; k < 4; ++k) d.b[k] = parse_complex();
    expect_keyword("memb");
    for (std::size_t k = 0; k < 4; ++k) d.beta[k] = parse_real();
    return d;
  }

  GateName parse_gate_name_tok() {
    const Token name = expect_name("a gate name");
    const auto gate = parse_gate_name(name.text);
    if (!gate)
      throw SemanticError(name.line, "unknown gate name '" + name.text + "'");
    return *gate;
  }

  StatementNode parse_gate() {
    GateStmt g;
    g.quantum = parse_gate_name_tok();
    g.membership = GateName::I;
    if (accept(TokKind::Slash)) g.membership = parse_gate_name_tok();
    expect_keyword("on");
    g.targets.push_back(expect_name("a target identifier").text);
    if (peek().kind == TokKind::Name)
      g.targets.push_back(expect_name("a target identifier").text);
    return g;
  }

  StatementNode parse_project() {
    const Token name = expect_name("a projection name");
    const auto proj = parse_projection_name(name.text);
    if (!proj)
      throw SemanticError(name.line,
                          "unknown projection name '" + name.text + "'");
    expect_keyword("on");
    return ProjectStmt{*proj, expect_name("a target identifier").text};
  }

  StatementNode parse_pair() {
    PairStmt p;
    p.first = expect_name("a qubit identifier").text;
    p.second = expect_name("a qubit identifier").text;
    return p;
  }

  StatementNode parse_report() {
    const Token kind = expect_name("a report kind");
    if (kind.text == "probs") return ReportStmt{ReportKind::Probs};
    if (kind.text == "memb") return ReportStmt{ReportKind::Memb};
    if (kind.text == "density") return ReportStmt{ReportKind::Density};
    if (kind.text == "expect") return ReportStmt{ReportKind::Expect};
    if (kind.text == "concurrence")
      return ReportStmt{ReportKind::Concurrence};
    throw SyntaxError(kind.line, kind.col,
                      "'probs', 'memb', 'density', 'expect', or 'concurrence'",
                      "'" + kind.text + "'");
  }

  // -------------------------------------------------- static semantics --

  struct DeclInfo {
    bool is_register{};
    bool consumed{};
  };

  void analyze(Program& prog) {
    std::map<std::string, DeclInfo> decls;
    std::vector<std::string> paired;
    bool have_register = false;
    bool model_seen = false;
    int qubit_weight = 0;

    auto lookup = [&](const std::string& id, int line) -> DeclInfo& {
      const auto it = decls.find(id);
      if (it == decls.end())
        throw SemanticError(line, "undeclared identifier '" + id + "'");
      return it->second;
    };

    auto declare = [&](const std::string& id, bool is_register, int line) {
      if (decls.count(id))
        throw SemanticError(line, "duplicate declaration of '" + id + "'");
      const int weight = is_register ? 2 : 1;
      if (qubit_weight + weight > 2)
        throw SemanticError(
            line, "qubit budget exceeded (a program holds at most two qubits)");
      if (is_register && have_register)
        throw SemanticError(line, "only one two-qubit register per program");
      decls[id] = {is_register, false};
      qubit_weight += weight;
      if (is_register) have_register = true;
    };

    auto live_qubits = [&] {
      int count = 0;
      for (const auto& [id, info] : decls)
        if (!info.is_register && !info.consumed) ++count;
      return count;
    };

    for (const Statement& stmt : prog.statements) {
      const int line = stmt.line;
      if (const auto* m = std::get_if<ModelStmt>(&stmt.node)) {
        if (model_seen) throw SemanticError(line, "duplicate model statement");
        model_seen = true;
        prog.model = m->model;
      } else if (const auto* d = std::get_if<DeclareAmps>(&stmt.node)) {
        declare(d->id, false, line);
      } else if (const auto* d = std::get_if<DeclareBloch>(&stmt.node)) {
        declare(d->id, false, line);
      } else if (const auto* d = std::get_if<DeclarePM>(&stmt.node)) {
        declare(d->id, false, line);
      } else if (const auto* d = std::get_if<DeclareRegister>(&stmt.node)) {
        declare(d->id, true, line);
      } else if (const auto* g = std::get_if<GateStmt>(&stmt.node)) {
        check_gate(*g, line, lookup, paired);
      } else if (const auto* p = std::get_if<ProjectStmt>(&stmt.node)) {
        const DeclInfo& info = lookup(p->target, line);
        if (info.is_register)
          throw SemanticError(line, "projections target a single qubit, not "
                                    "register '" + p->target + "'");
        if (info.consumed)
          throw SemanticError(
              line, "qubit '" + p->target + "' was consumed by pair");
      } else if (const auto* p = std::get_if<PairStmt>(&stmt.node)) {
        if (p->first == p->second)
          throw SemanticError(line, "pair requires two distinct qubits");
        if (have_register)
          throw SemanticError(line, "only one two-qubit register per program");
        DeclInfo& a = lookup(p->first, line);
        DeclInfo& b = lookup(p->second, line);
        if (a.is_register || b.is_register)
          throw SemanticError(line, "pair takes qubits, not registers");
        if (a.consumed || b.consumed)
          throw SemanticError(line, "paired qubits cannot be paired again");
        a.consumed = true;
        b.consumed = true;
        paired = {p->first, p->second};
        have_register = true;
      } else if (const auto* r = std::get_if<ReportStmt>(&stmt.node)) {
        switch (r->kind) {
          case ReportKind::Probs:
          case ReportKind::Memb:
            if (live_qubits() == 0 && !have_register)
              throw SemanticError(line, "nothing declared to report");
            break;
          case ReportKind::Density:
          case ReportKind::Expect:
            if (live_qubits() == 0)
              throw SemanticError(
                  line, std::string("report ") +
                            std::string(report_kind_str(r->kind)) +
                            " requires a live single qubit");
            break;
          case ReportKind::Concurrence:
            if (!have_register)
              throw SemanticError(
                  line, "report concurrence requires a two-qubit register");
            break;
        }
      }
    }
  }

  template <typename Lookup>
  static void check_gate(const GateStmt& g, int line, Lookup& lookup,
                         const std::vector<std::string>& paired) {
    if (g.membership == GateName::Y)
      throw SemanticError(line, "Y cannot act on membership amplitudes");
    const int aq = gate_arity(g.quantum);
    const int am = gate_arity(g.membership);
    if (aq != 0 && am != 0 && aq != am)
      throw SemanticError(line, std::string("gate arity mismatch: ") +
                                    std::string(gate_name_str(g.quantum)) +
                                    "/" +
                                    std::string(gate_name_str(g.membership)));
    const int effective = std::max(aq, am);  // 0 adapts to the target
    if (g.targets.size() == 1) {
      const DeclInfo& info = lookup(g.targets[0], line);
      if (info.is_register) {
        if (effective == 1)
          throw SemanticError(line, "single-qubit gate applied to register '" +
                                        g.targets[0] + "'");
      } else {
        if (info.consumed)
          throw SemanticError(
              line, "qubit '" + g.targets[0] + "' was consumed by pair");
        if (effective == 2)
          throw SemanticError(line,
                              "two-qubit gate needs a register or a paired "
                              "couple of targets");
      }
    } else {
      const DeclInfo& a = lookup(g.targets[0], line);
      const DeclInfo& b = lookup(g.targets[1], line);
      if (a.is_register || b.is_register)
        throw SemanticError(line, "two-target gates take paired qubits");
      if (effective == 1)
        throw SemanticError(line, "single-qubit gate cannot take two targets");
      if (paired.empty())
        throw SemanticError(
            line, "two-qubit gates require a preceding pair statement");
      if (paired[0] != g.targets[0] || paired[1] != g.targets[1])
        throw SemanticError(line, "targets must match the paired order '" +
                                      paired[0] + " " + paired[1] + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------- render --

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_complex(Complex z) {
  return "(" + fmt_real(z.real()) + "," + fmt_real(z.imag()) + ")";
}

}  // namespace

Program parse_program(std::string_view source) {
  return Parser(source).run();
}

std::string render(const Program& program) {
  std::ostringstream out;
  for (const Statement& stmt : program.statements) {
    const StatementNode& node = stmt.node;
    if (const auto* m = std::get_if<ModelStmt>(&node)) {
      out << "model " << membership_model_name(m->model);
    } else if (const auto* d = std::get_if<DeclareAmps>(&node)) {
      out << "qubit " << d->id << " amps " << fmt_complex(d->a[0]) << " "
          << fmt_complex(d->a[1]) << " memb " << fmt_real(d->alpha[0]) << " "
          << fmt_real(d->alpha[1]);
    } else if (const auto* d = std::get_if<DeclareBloch>(&node)) {
      out << "qubit " << d->id << " bloch " << fmt_real(d->theta) << " "
          << fmt_real(d->phi) << " " << fmt_real(d->theta_mu);
    } else if (const auto* d = std::get_if<DeclarePM>(&node)) {
      out << "qubit " << d->id << " pm " << fmt_real(d->p) << " "
          << fmt_real(d->mu);
    } else if (const auto* d = std::get_if<DeclareRegister>(&node)) {
      out << "register " << d->id << " amps";
      for (const Complex& b : d->b) out << " " << fmt_complex(b);
      out << " memb";
      for (double beta : d->beta) out << " " << fmt_real(beta);
    } else if (const auto* g = std::get_if<GateStmt>(&node)) {
      out << "gate " << gate_name_str(g->quantum) << "/"
          << gate_name_str(g->membership) << " on";
      for (const std::string& t : g->targets) out << " " << t;
    } else if (const auto* p = std::get_if<ProjectStmt>(&node)) {
      out << "project " << projection_name_str(p->proj) << " on " << p->target;
    } else if (const auto* p = std::get_if<PairStmt>(&node)) {
      out << "pair " << p->first << " " << p->second;
    } else if (const auto* r = std::get_if<ReportStmt>(&node)) {
      out << "report " << report_kind_str(r->kind);
    }
    out << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------- execute --

namespace {

struct LiveState {
  std::string id;
  std::variant<KroneckerQubit, KronColumn> state;
  bool consumed = false;

  bool projected() const { return state.index() == 1; }
};

class Executor {
 public:
  Executor(const Program& prog, const ExecuteOptions& opts)
      : prog_(prog),
        tol_(opts.tolerance),
        model_(opts.model_override.value_or(prog.model)) {}

  Report run() {
    report_.model = std::string(membership_model_name(model_));
    for (const Statement& stmt : prog_.statements) {
      line_ = stmt.line;
      try {
        std::visit([this](const auto& node) { run_node(node); }, stmt.node);
      } catch (const DomainError& e) {
        throw DomainError("line " + std::to_string(stmt.line) + ": " +
                          e.what());
      }
    }
    return std::move(report_);
  }

 private:
  void run_node(const ModelStmt&) {}  // hoisted at parse time

  void run_node(const DeclareAmps& d) {
    qubits_.push_back({d.id,
                       KroneckerQubit({d.a[0], d.alpha[0]},
                                      {d.a[1], d.alpha[1]}, tol_),
                       false});
  }

  void run_node(const DeclareBloch& d) {
    const ObscureQudit state = from_bloch({d.theta, d.phi, d.theta_mu}, tol_);
    qubits_.push_back({d.id, to_kronecker(state, tol_), false});
  }

  void run_node(const DeclarePM& d) {
    qubits_.push_back({d.id, from_prob_membership(d.p, d.mu, model_), false});
  }

  void run_node(const DeclareRegister& d) {
    Mat2c b;
    Mat2r beta;
    b(0, 0) = d.b[0];
    b(1, 0) = d.b[1];
    b(0, 1) = d.b[2];
    b(1, 1) = d.b[3];
    beta(0, 0) = d.beta[0];
    beta(1, 0) = d.beta[1];
    beta(0, 1) = d.beta[2];
    beta(1, 1) = d.beta[3];
    reg_.emplace(TwoQubitRegister(b, beta, tol_));
    reg_id_ = d.id;
  }

  void run_node(const GateStmt& g) {
    if (g.targets.size() == 2 || (reg_ && g.targets[0] == reg_id_)) {
      const ObscureQuantumGate gate(gate_matrix4(g.quantum),
                                    real_gate_matrix4(g.membership), tol_);
      *reg_ = apply2(gate, *reg_, tol_);
      return;
    }
    LiveState& q = find(g.targets[0]);
    const KroneckerQubit ket = materialize(q);
    const ObscureQuantumGate gate(gate_matrix2(g.quantum),
                                  real_gate_matrix2(g.membership), tol_);
    q.state = apply(gate, ket, tol_);
  }

  void run_node(const ProjectStmt& p) {
    LiveState& q = find(p.target);
    const DoubleProjection proj = projection(p.proj);
    if (const auto* ket = std::get_if<KroneckerQubit>(&q.state))
      q.state = apply(proj, column(*ket));
    else
      q.state = apply(proj, std::get<KronColumn>(q.state));
  }

  void run_node(const PairStmt& p) {
    LiveState& a = find(p.first);
    LiveState& b = find(p.second);
    const KroneckerQubit ka = materialize(a);
    const KroneckerQubit kb = materialize(b);
    reg_.emplace(tensor_two(ka, kb));
    reg_id_ = p.first + "*" + p.second;
    a.consumed = true;
    b.consumed = true;
  }

  void run_node(const ReportStmt& r) {
    switch (r.kind) {
      case ReportKind::Probs: report_probs(); return;
      case ReportKind::Memb: report_memb(); return;
      case ReportKind::Density: report_density(); return;
      case ReportKind::Expect: report_expect(); return;
      case ReportKind::Concurrence: report_concurrence(); return;
    }
  }

  // ------------------------------------------------------------ helpers --

  LiveState& find(const std::string& id) {
    for (LiveState& q : qubits_)
      if (q.id == id) return q;
    throw DomainError("unknown qubit '" + id + "'");  // unreachable after analyze
  }

  // Projected states live as raw columns until an operation needs a valid
  // state again; the sector-wise rescale is recorded as a note section.
  KroneckerQubit materialize(LiveState& q) {
    if (const auto* ket = std::get_if<KroneckerQubit>(&q.state)) return *ket;
    const KroneckerQubit ket =
        renormalize_sectors(std::get<KronColumn>(q.state), tol_);
    note(q.id, "projected state renormalized sector-wise before this "
               "operation");
    q.state = ket;
    return ket;
  }

  void note(const std::string& id, const std::string& message) {
    Json payload;
    payload["id"] = id;
    payload["line"] = line_;
    payload["message"] = message;
    report_.sections.push_back({"note", std::move(payload)});
  }

  void push_section(const char* kind, const LiveState& q, Json payload) {
    if (q.projected()) payload["projected"] = true;
    report_.sections.push_back({kind, std::move(payload)});
  }

  void report_probs() {
    for (LiveState& q : qubits_) {
      if (q.consumed) continue;
      std::array<double, 2> values{};
      if (const auto* ket = std::get_if<KroneckerQubit>(&q.state)) {
        values = ket->probabilities();
      } else {
        const KronColumn& col = std::get<KronColumn>(q.state);
        values = {abs_sq(col.quantum[0]), abs_sq(col.quantum[1])};
      }
      Json payload;
      payload["id"] = q.id;
      payload["values"] = json_numbers(values);
      push_section("probs", q, std::move(payload));
    }
    if (reg_) {
      const std::array<Complex, 4> b = reg_->b_vector();
      std::array<double, 4> p{};
      double sum = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        p[k] = abs_sq(b[k]);
        sum += p[k];
      }
      if (sum <= 0.0) throw DomainError("register carries no quantum weight");
      for (double& v : p) v /= sum;
      Json payload;
      payload["id"] = reg_id_;
      payload["values"] = json_numbers(p);
      report_.sections.push_back({"probs", std::move(payload)});
    }
  }

  void report_memb() {
    const std::string model_name(membership_model_name(model_));
    for (LiveState& q : qubits_) {
      if (q.consumed) continue;
      std::array<double, 2> alpha{};
      if (const auto* ket = std::get_if<KroneckerQubit>(&q.state))
        alpha = ket->membership();
      else
        alpha = std::get<KronColumn>(q.state).membership;
      const MembershipVector mu = evaluate_membership(model_, alpha, tol_);
      Json payload;
      payload["id"] = q.id;
      payload["model"] = model_name;
      payload["values"] = json_numbers(mu);
      push_section("memb", q, std::move(payload));
    }
    if (reg_) {
      const RegisterReport rr = register_report(*reg_, model_);
      Json payload;
      payload["id"] = reg_id_;
      payload["model"] = model_name;
      payload["values"] = json_numbers(rr.memberships);
      report_.sections.push_back({"memb", std::move(payload)});
    }
  }

  static Mat4c column_density(const KronColumn& col) {
    const std::array<Complex, 4> u = {col.quantum[0], col.quantum[1],
                                      Complex(col.membership[0]),
                                      Complex(col.membership[1])};
    const std::array<Complex, 4> w = {std::conj(col.quantum[0]),
                                      std::conj(col.quantum[1]),
                                      Complex(col.membership[0]),
                                      Complex(col.membership[1])};
    Mat4c rho;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) rho(i, j) = 0.5 * u[i] * w[j];
    return rho;
  }

  void report_density() {
    for (LiveState& q : qubits_) {
      if (q.consumed) continue;
      Mat4c rho;
      if (const auto* ket = std::get_if<KroneckerQubit>(&q.state))
        rho = density4(*ket);
      else
        rho = column_density(std::get<KronColumn>(q.state));
      Json payload;
      payload["id"] = q.id;
      payload["matrix"] = json_matrix(rho);
      push_section("density", q, std::move(payload));
    }
  }

  void report_expect() {
    static constexpr ProjectionName kOrder[] = {
        ProjectionName::P0, ProjectionName::P1,   ProjectionName::P01,
        ProjectionName::P10, ProjectionName::Q0,  ProjectionName::Q1,
        ProjectionName::Q0mu, ProjectionName::Q1mu};
    for (LiveState& q : qubits_) {
      if (q.consumed) continue;
      Json values;
      for (const ProjectionName name : kOrder) {
        const DoubleProjection p = projection(name);
        double v = 0.0;
        if (const auto* ket = std::get_if<KroneckerQubit>(&q.state))
          v = expectation(p, *ket);
        else
          // Stored columns are unscaled; the physical column carries 1/sqrt2
          // per sector, so the quadratic form halves.
          v = 0.5 * expectation(p, std::get<KronColumn>(q.state));
        values[std::string(projection_name_str(name))] = json_number(v);
      }
      Json payload;
      payload["id"] = q.id;
      payload["values"] = std::move(values);
      push_section("expect", q, std::move(payload));
    }
  }

  void report_concurrence() {
    const Concurrence c = concurrence(*reg_);
    Json payload;
    payload["id"] = reg_id_;
    payload["c_q"] = json_number(c.c_q);
    payload["c_mu"] = json_number(c.c_mu);
    payload["c_scal"] = json_number(c.c_scal);
    report_.sections.push_back({"concurrence", std::move(payload)});
  }

  const Program& prog_;
  double tol_;
  MembershipModel model_;
  std::vector<LiveState> qubits_;
  std::optional<TwoQubitRegister> reg_;
  std::string reg_id_;
  Report report_;
  int line_ = 0;
};

}  // namespace

Report execute(const Program& program, const ExecuteOptions& options) {
  return Executor(program, options).run();
}

}  // namespace obsq
