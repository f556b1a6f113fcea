#ifndef CURVECOUNT_TOOLS_COMMANDS_HPP
#define CURVECOUNT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "curvecount/experiment.hpp"

namespace curvecount::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kResourceCap = 3, kDegenerate = 4 };

struct PredictOptions {
  std::uint32_t p = 2;
  std::string surface = "p2";
};

struct RunOptions {
  ExperimentConfig config;
  std::string surface = "p2";
  std::string mode = "enumerate";
  /// Output prefix; empty prints the result document to stdout.
  std::string out;
  std::string command_line;
};

struct CltOptions {
  std::uint32_t p = 2;
  std::vector<std::uint64_t> n_list;
};

struct ZetaOptions {
  std::uint32_t p = 2;
  std::string surface = "p2";
  int s = 3;
  int horizon = 6;
};

struct OracleOptions {
  std::uint32_t p = 2;
  std::string surface = "p2";
  int degree = 2;
  std::uint64_t count = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t point_cap = std::uint64_t{1} << 26U;
  std::uint64_t enumeration_cap = std::uint64_t{1} << 16U;
};

int cmd_predict(const PredictOptions& o, std::ostream& out);
int cmd_run(const RunOptions& o, std::ostream& out);
int cmd_clt(const CltOptions& o, std::ostream& out);
int cmd_zeta(const ZetaOptions& o, std::ostream& out);
int cmd_oracle(const OracleOptions& o, std::ostream& out);

/// Runs fn and maps library exceptions to exit codes, reporting on err.
int guarded(const std::function<int()>& fn, std::ostream& err);

}  // namespace curvecount::cli

#endif
