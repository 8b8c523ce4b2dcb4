#include "obsq/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace obsq {

double round_sig(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::optional<std::pair<long long, long long>> as_small_fraction(
    double v, long long max_den, double tol) {
  if (!std::isfinite(v) || std::abs(v) > 1e6) return std::nullopt;
  for (long long den = 1; den <= max_den; ++den) {
    const long long num = std::llround(v * static_cast<double>(den));
    if (std::abs(v - static_cast<double>(num) / static_cast<double>(den)) <=
        tol) {
      const long long g = std::gcd(num, den);
      return std::pair{num / g, den / g};
    }
  }
  return std::nullopt;
}

std::string format_number(double v) {
  if (const auto frac = as_small_fraction(v)) {
    if (frac->second == 1) return std::to_string(frac->first);
    return std::to_string(frac->first) + "/" + std::to_string(frac->second);
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Json json_number(double v) { return round_sig(v); }

Json json_numbers(std::span<const double> values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(round_sig(v));
  return arr;
}

Json json_complex(Complex z) {
  return Json::array({round_sig(z.real()), round_sig(z.imag())});
}

Json json_matrix(const Mat4c& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(json_complex(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json report_to_json(const Report& report) {
  Json j;
  j["model"] = report.model;
  Json sections = Json::array();
  for (const ReportSection& s : report.sections)
    sections.push_back(Json{{"kind", s.kind}, {"payload", s.payload}});
  j["sections"] = sections;
  return j;
}

Report report_from_json(const Json& j) {
  Report report;
  report.model = j.at("model").get<std::string>();
  for (const Json& s : j.at("sections"))
    report.sections.push_back(
        {s.at("kind").get<std::string>(), s.at("payload")});
  return report;
}

namespace {

std::string format_json_scalar(const Json& v) {
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// [re, im] -> "(re,im)"
std::string format_complex_entry(const Json& pair) {
  return "(" + format_number(pair.at(0).get<double>()) + "," +
         format_number(pair.at(1).get<double>()) + ")";
}

std::string format_values(const Json& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_json_scalar(values.at(i));
  }
  return out + "]";
}

std::string section_subject(const Json& payload) {
  std::string subject;
  if (payload.contains("id")) subject = payload.at("id").get<std::string>();
  if (payload.contains("projected") && payload.at("projected").get<bool>())
    subject += " (projected)";
  return subject;
}

}  // namespace

std::string to_text(const Report& report) {
  std::ostringstream out;
  out << "model: " << report.model << "\n";
  for (const ReportSection& s : report.sections) {
    const Json& p = s.payload;
    if (s.kind == "probs") {
      out << "probs " << section_subject(p) << ": "
          << format_values(p.at("values")) << "\n";
    } else if (s.kind == "memb") {
      out << "memb " << section_subject(p)
          << " model=" << p.at("model").get<std::string>() << ": "
          << format_values(p.at("values")) << "\n";
    } else if (s.kind == "density") {
      out << "density " << section_subject(p) << ":\n";
      for (const Json& row : p.at("matrix")) {
        out << " ";
        for (const Json& entry : row) out << " " << format_complex_entry(entry);
        out << "\n";
      }
    } else if (s.kind == "expect") {
      out << "expect " << section_subject(p) << ":";
      for (const auto& [name, value] : p.at("values").items())
        out << " " << name << "=" << format_number(value.get<double>());
      out << "\n";
    } else if (s.kind == "concurrence") {
      out << "concurrence " << section_subject(p)
          << ": c_q=" << format_number(p.at("c_q").get<double>())
          << ", c_mu=" << format_number(p.at("c_mu").get<double>())
          << ", c_scal=" << format_number(p.at("c_scal").get<double>())
          << "\n";
    } else if (s.kind == "note") {
      out << "note (" << p.at("id").get<std::string>() << ", line "
          << p.at("line").get<int>() << "): "
          << p.at("message").get<std::string>() << "\n";
    } else {
      out << s.kind << ": " << p.dump() << "\n";
    }
  }
  return out.str();
}

}  // namespace obsq
