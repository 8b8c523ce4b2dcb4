#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "obsq/matrix.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

using Json = nlohmann::ordered_json;

// One evaluation result: a kind tag ("probs", "memb", "density", "expect",
// "concurrence", "note") and a structured payload.
struct ReportSection {
  std::string kind;
  Json payload;

  bool operator==(const ReportSection&) const = default;
};

struct Report {
  std::string model;
  std::vector<ReportSection> sections;

  bool operator==(const Report&) const = default;
};

// Rounds to 12 significant digits (and flushes -0 to 0). Every number is
// pushed through this before it enters a payload, so serialized reports
// round-trip bit-for-bit.
double round_sig(double v);

// v as a reduced fraction num/den with den <= max_den, if one lies within
// tol. Used by the text renderer to mirror hand-written tables.
std::optional<std::pair<long long, long long>> as_small_fraction(
    double v, long long max_den = 32, double tol = 1e-12);

// Human-readable scalar: a small fraction when one matches, a decimal
// otherwise.
std::string format_number(double v);

// Payload builders (all rounding on the way in).
Json json_number(double v);
Json json_numbers(std::span<const double> values);
Json json_complex(Complex z);  // [re, im]
Json json_matrix(const Mat4c& m);  // row-major, entries as [re, im]

// {"model": ..., "sections": [{"kind": ..., "payload": ...}, ...]}
Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

std::string to_text(const Report& report);

}  // namespace obsq
