#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/random.hpp"

// Command implementations behind the `indpoly` executable. Each returns the
// process exit status: 0 on success, 1 when the input cannot be read or
// parsed, 2 when evaluation fails. Results go to `out`, diagnostics to `err`.
namespace indpoly::cli {

enum class OutputFormat { Text, Json };

struct ComputeOptions {
  EvalConfig cfg{};
  OutputFormat format = OutputFormat::Text;
};

struct CheckOptions {
  EvalConfig cfg{};
  // Identity names to run; empty runs all of them.
  std::vector<std::string> only;
};

int cmd_compute(const std::string& path, const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_cover(const std::string& path, const ComputeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gscp(const std::string& path, OutputFormat format, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& path, const CheckOptions& opts, std::ostream& out, std::ostream& err);
// Writes to `out_path`, or to `out` when the path is "-".
int cmd_random(const RandomSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckLine {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::size_t cases = 0;
  std::string detail;
};

const std::vector<std::string>& identity_names();

// Runs every applicable identity on `g`. Reference values come from the
// brute-force oracle when `g` is within its bound, otherwise from `cfg`.
std::vector<CheckLine> run_identity_checks(const Hypergraph& g, const EvalConfig& cfg,
                                           const std::vector<std::string>& only = {});

std::string format_check_line(const CheckLine& line);

}  // namespace indpoly::cli
