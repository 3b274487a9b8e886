#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace moebius::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidParameters = 2,
  kPoleAtStart = 3,
  kVerdictMismatch = 4,
};

struct RunConfig {
  std::string command;
  std::string a, b, c;
  std::optional<std::int64_t> p;
  std::optional<std::string> x0;
  std::size_t n = 0;
  std::size_t qmax = 64;
  std::size_t bins = 40;
  double lo = -10.0;
  double hi = 10.0;
  double tol = 1e-10;
  std::string output;  // empty: stdout
  std::string format;  // empty: per-command default
  std::optional<int> sweep;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moebius::cli
