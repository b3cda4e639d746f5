#pragma once

// Batch front end: every subcommand turns a grid of points into OutputRows
// written as CSV or JSON.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stablesup/eval.hpp"

namespace stablesup::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kPartialFailure = 2, kVerificationFailure = 3 };

enum class Format { csv, json };

struct OutputRow {
  double alpha = 0.0;
  double x_or_lambda = 0.0;
  Method method = Method::automatic;
  std::optional<double> value;           // empty on error rows
  std::optional<double> error_estimate;  // empty when unknown or on error rows
  nlohmann::ordered_json diagnostics = nlohmann::ordered_json::object();
};

/// 17 significant digits, so a parse returns the same double.
std::string format_number(double v);

void write_csv(std::ostream& os, const std::vector<OutputRow>& rows);
void write_json(std::ostream& os, const std::vector<OutputRow>& rows);

/// Parses the command line, runs the subcommand and writes rows to `out`
/// (or to --out). Diagnostics and usage go to `err`. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stablesup::cli
