#include "obsq/projections.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "obsq/errors.hpp"

namespace obsq {
namespace {

struct NamedDiags {
  ProjectionName name;
  std::array<double, 2> q;
  std::array<double, 2> m;
};

constexpr NamedDiags kTable[] = {
    {ProjectionName::P0, {1, 0}, {1, 0}},
    {ProjectionName::P1, {0, 1}, {0, 1}},
    {ProjectionName::P01, {1, 0}, {0, 1}},
    {ProjectionName::P10, {0, 1}, {1, 0}},
    {ProjectionName::Q0, {1, 0}, {0, 0}},
    {ProjectionName::Q1, {0, 1}, {0, 0}},
    {ProjectionName::Q0mu, {0, 0}, {1, 0}},
    {ProjectionName::Q1mu, {0, 0}, {0, 1}},
};

}  // namespace

std::optional<ProjectionName> parse_projection_name(std::string_view name) {
  std::string lowered(name);
  for (char& c : lowered) c = static_cast<char>(std::tolower(c));
  if (lowered == "p0") return ProjectionName::P0;
  if (lowered == "p1") return ProjectionName::P1;
  if (lowered == "p01") return ProjectionName::P01;
  if (lowered == "p10") return ProjectionName::P10;
  if (lowered == "q0") return ProjectionName::Q0;
  if (lowered == "q1") return ProjectionName::Q1;
  if (lowered == "q0mu") return ProjectionName::Q0mu;
  if (lowered == "q1mu") return ProjectionName::Q1mu;
  return std::nullopt;
}

std::string_view projection_name_str(ProjectionName name) {
  switch (name) {
    case ProjectionName::P0: return "P0";
    case ProjectionName::P1: return "P1";
    case ProjectionName::P01: return "P01";
    case ProjectionName::P10: return "P10";
    case ProjectionName::Q0: return "Q0";
    case ProjectionName::Q1: return "Q1";
    case ProjectionName::Q0mu: return "Q0mu";
    case ProjectionName::Q1mu: return "Q1mu";
  }
  return "P0";
}

DoubleProjection::DoubleProjection(ProjectionName name) {
  for (const NamedDiags& entry : kTable) {
    if (entry.name == name) {
      q_ = entry.q;
      m_ = entry.m;
      return;
    }
  }
}

DoubleProjection::DoubleProjection(std::array<double, 2> quantum_diag,
                                   std::array<double, 2> membership_diag)
    : q_(quantum_diag), m_(membership_diag) {
  for (double d : {q_[0], q_[1], m_[0], m_[1]}) {
    if (d != 0.0 && d != 1.0)
      throw DomainError("projection diagonals must be 0/1");
  }
}

std::optional<ProjectionName> DoubleProjection::name() const {
  for (const NamedDiags& entry : kTable)
    if (entry.q == q_ && entry.m == m_) return entry.name;
  return std::nullopt;
}

bool DoubleProjection::is_zero() const {
  return q_[0] == 0.0 && q_[1] == 0.0 && m_[0] == 0.0 && m_[1] == 0.0;
}

Mat4r DoubleProjection::dense() const {
  return Mat4r::diagonal({q_[0], q_[1], m_[0], m_[1]});
}

std::pair<DoubleProjection, DoubleProjection> standard_projections() {
  return {DoubleProjection(ProjectionName::P0),
          DoubleProjection(ProjectionName::P1)};
}

std::pair<DoubleProjection, DoubleProjection> crossed_projections() {
  return {DoubleProjection(ProjectionName::P01),
          DoubleProjection(ProjectionName::P10)};
}

std::array<DoubleProjection, 4> half_projections() {
  return {DoubleProjection(ProjectionName::Q0),
          DoubleProjection(ProjectionName::Q1),
          DoubleProjection(ProjectionName::Q0mu),
          DoubleProjection(ProjectionName::Q1mu)};
}

DoubleProjection projection(ProjectionName name) {
  return DoubleProjection(name);
}

KronColumn apply(const DoubleProjection& p, const KroneckerQubit& ket) {
  return apply(p, physical_column(ket));
}

KronColumn apply(const DoubleProjection& p, const KronColumn& col) {
  KronColumn out;
  out.quantum[0] = p.quantum_diag()[0] * col.quantum[0];
  out.quantum[1] = p.quantum_diag()[1] * col.quantum[1];
  out.membership[0] = p.membership_diag()[0] * col.membership[0];
  out.membership[1] = p.membership_diag()[1] * col.membership[1];
  return out;
}

double expectation(const DoubleProjection& p, const KroneckerQubit& ket) {
  return expectation(p, physical_column(ket));
}

double expectation(const DoubleProjection& p, const KronColumn& col) {
  double s = 0.0;
  s += p.quantum_diag()[0] * abs_sq(col.quantum[0]);
  s += p.quantum_diag()[1] * abs_sq(col.quantum[1]);
  s += p.membership_diag()[0] * col.membership[0] * col.membership[0];
  s += p.membership_diag()[1] * col.membership[1] * col.membership[1];
  return s;
}

KroneckerQubit renormalize_sectors(const KronColumn& col, double tol) {
  const double qnorm =
      std::sqrt(abs_sq(col.quantum[0]) + abs_sq(col.quantum[1]));
  const double mnorm = std::sqrt(col.membership[0] * col.membership[0] +
                                 col.membership[1] * col.membership[1]);
  if (qnorm <= tol)
    throw DomainError("cannot renormalize a zero quantum sector");
  if (mnorm <= tol)
    throw DomainError("cannot renormalize a zero membership sector");
  return KroneckerQubit(
      {col.quantum[0] / qnorm, col.membership[0] / mnorm},
      {col.quantum[1] / qnorm, col.membership[1] / mnorm}, tol);
}

}  // namespace obsq
