#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

#include "commands.hpp"

using namespace curvecount;
using namespace curvecount::cli;

namespace {

unsigned default_workers() {
  if (const char* env = std::getenv("CURVECOUNT_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring CURVECOUNT_WORKERS=" << env << '\n';
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point-count statistics for curves on P2 and the quadric P1xP1 over F_p"};
  app.set_config("--config", "", "Read options from a key = value file (flags win)");
  app.require_subcommand(1);

  PredictOptions predict;
  auto* c_predict = app.add_subcommand("predict", "Exact predictor report");
  c_predict->add_option("--p", predict.p, "Prime")->required();
  c_predict->add_option("--surface", predict.surface, "p2 or segre")->capture_default_str();

  RunOptions run;
  run.config.workers = default_workers();
  auto* c_run = app.add_subcommand("run", "Run a family of forms and write result JSON, CSV and manifest");
  c_run->add_option("--p", run.config.p, "Prime")->required();
  c_run->add_option("--surface", run.surface, "p2 or segre")->capture_default_str();
  c_run->add_option("--degree", run.config.degree, "Degree d")->required();
  c_run->add_option("--mode", run.mode, "enumerate or sample")->capture_default_str();
  c_run->add_option("--samples", run.config.sample_count, "Sample count (sample mode)");
  c_run->add_option("--seed", run.config.master_seed, "Master seed")->capture_default_str();
  c_run->add_option("--workers", run.config.workers, "Worker threads (default: $CURVECOUNT_WORKERS or all cores)");
  c_run->add_option("--cap", run.config.enumeration_cap, "Enumeration cap")->capture_default_str();
  c_run->add_flag("--ambient", run.config.segre_via_ambient, "Quadric: sample forms on P3 and restrict");
  c_run->add_option("--out", run.out, "Output prefix for PREFIX.json, PREFIX.csv, PREFIX.manifest.json");

  CltOptions clt;
  auto* c_clt = app.add_subcommand("clt", "KS distance of the normalized binomial to the Gaussian (CSV)");
  c_clt->add_option("--p", clt.p, "Prime")->required();
  c_clt->add_option("--n-list", clt.n_list, "Comma-separated trial counts")->required()->delimiter(',');

  ZetaOptions zeta;
  auto* c_zeta = app.add_subcommand("zeta", "Truncated Euler products against the exact zeta value");
  c_zeta->add_option("--p", zeta.p, "Prime")->required();
  c_zeta->add_option("--surface", zeta.surface, "p2 or segre")->capture_default_str();
  c_zeta->add_option("--s", zeta.s, "Integer s >= 3")->capture_default_str();
  c_zeta->add_option("--horizon", zeta.horizon, "Largest closed-point degree")->capture_default_str();

  OracleOptions oracle;
  auto* c_oracle = app.add_subcommand("oracle", "Cross-check elimination against the brute-force scan");
  c_oracle->add_option("--p", oracle.p, "Prime")->required();
  c_oracle->add_option("--surface", oracle.surface, "p2 or segre")->capture_default_str();
  c_oracle->add_option("--degree", oracle.degree, "Degree d")->required();
  c_oracle->add_option("--count", oracle.count, "Number of random forms");
  c_oracle->add_flag("--exhaustive", oracle.exhaustive, "Check every form");
  c_oracle->add_option("--seed", oracle.seed, "Seed for --count")->capture_default_str();
  c_oracle->add_option("--point-cap", oracle.point_cap, "Largest scan allowed per form")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  return guarded(
      [&]() -> int {
        if (*c_predict) return cmd_predict(predict, std::cout);
        if (*c_run) {
          run.command_line = join_args(argc, argv);
          return cmd_run(run, std::cout);
        }
        if (*c_clt) return cmd_clt(clt, std::cout);
        if (*c_zeta) return cmd_zeta(zeta, std::cout);
        return cmd_oracle(oracle, std::cout);
      },
      std::cerr);
}
