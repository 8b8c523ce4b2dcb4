#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "obsq/membership.hpp"
#include "obsq/numeric.hpp"

namespace obsq {

enum class OutputFormat { Text, Json };

struct RunOptions {
  OutputFormat format = OutputFormat::Text;
  std::optional<MembershipModel> model_override;
  double tolerance = kDefaultTolerance;
  // Accepted for interface stability; no stochastic paths exist yet.
  std::optional<long long> seed;
};

// Parses and executes a script, writing the report to `out` and diagnostics
// to `err`. Exit status: 0 success, 1 parse/semantic error, 2 numeric domain
// error. In JSON mode the report is the only thing written to `out`.
int run_source(const std::string& source, const RunOptions& options,
               std::ostream& out, std::ostream& err);

// Same, reading the script from a file; an unreadable path is a user error
// (status 1).
int run_script(const std::string& path, const RunOptions& options,
               std::ostream& out, std::ostream& err);

// Built-in verification suite over the library's pinned values: norm
// extremum, Bell-analog concurrence (built through the gate set), the
// partially-entangled register table, the projection product table, and the
// projection expectation identities. Prints one [PASS]/[FAIL] line per item;
// returns 0 when everything passes, 1 otherwise.
int selfcheck(std::ostream& out);

}  // namespace obsq
