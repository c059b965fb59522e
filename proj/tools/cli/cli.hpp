#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cherednik::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kUncertified = 3,
  kNumericalFailure = 4,
};

/// Job description assembled from an optional JSON config file and flag overrides.
struct JobConfig {
  std::string command;
  std::string group;
  std::string param = "0";
  std::optional<int> N;
  double tol = 1e-10;
  double check_tol = 1e-6;
  int precision = 128;
  std::string format = "json";
  std::string out;
  bool allow_uncertified = false;
  std::string irrep;
  std::string words;
  std::string shape;
};

/// Reads a config file; throws ParseError naming the offending field.
JobConfig load_config(const std::string& path);

/// Runs the command line `args` (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherednik::cli
