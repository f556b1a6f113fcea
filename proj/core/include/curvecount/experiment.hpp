#ifndef CURVECOUNT_EXPERIMENT_HPP
#define CURVECOUNT_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvecount/forms.hpp"
#include "curvecount/predictors.hpp"

namespace curvecount {

enum class RunMode { Enumerate, Sample };

RunMode parse_mode(const std::string& s);
std::string mode_name(RunMode m);

struct ExperimentConfig {
  std::uint32_t p = 2;
  Surface surface = Surface::P2;
  int degree = 1;
  RunMode mode = RunMode::Enumerate;
  std::uint64_t sample_count = 0;
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Quadric only: draw forms of degree d on P^3 and restrict, instead of
  /// drawing bidegree (d, d) forms directly.
  bool segre_via_ambient = false;

  /// Throws std::invalid_argument for an unusable configuration.
  void validate() const;
};

/// Forms per deterministic work unit. Seeds and merge order depend on it,
/// never on the worker count.
inline constexpr std::uint64_t kChunkSize = 512;

/// Seed of chunk c's private generator.
std::uint64_t chunk_seed(std::uint64_t master_seed, std::uint64_t chunk_index);

struct PredictedBlock {
  BigInt t;
  Rational r;
  Rational mean;
  Rational variance;
  Rational smooth_probability;
  std::vector<Rational> pmf;
};

PredictedBlock predicted_block(const SurfaceModel& surface);

struct ExperimentResult {
  ExperimentConfig config;
  std::uint64_t n_total = 0;
  std::uint64_t n_smooth = 0;
  std::uint64_t n_singular = 0;
  std::uint64_t n_not_a_curve = 0;
  std::uint64_t n_zero_form = 0;
  std::uint64_t n_vanishes_on_surface = 0;
  /// histogram[s] = smooth curves with s rational points, s = 0..t.
  std::vector<std::uint64_t> histogram;
  /// Empty when there is no smooth curve.
  std::optional<Rational> mean;
  std::optional<Rational> variance;
  /// n_smooth / (n_total - n_not_a_curve).
  std::optional<Rational> smooth_fraction;
  std::optional<Rational> tv_to_predicted;
  PredictedBlock predicted;
  std::string code_version;
  std::string run_id;
  /// Not part of the reproducible output.
  double elapsed_seconds = 0.0;

  /// Every examined form was NotACurve.
  bool degenerate() const noexcept { return n_total > 0 && n_not_a_curve == n_total; }
  std::vector<Rational> empirical_pmf() const;
  double smooth_fraction_standard_error() const;
};

/// Runs the family; throws CapExceeded, EliminationDegenerate, std::invalid_argument.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Exact M and V of a histogram (population moments).
std::pair<Rational, Rational> histogram_moments(const std::vector<std::uint64_t>& histogram);

std::string code_version();

}  // namespace curvecount

#endif  // CURVECOUNT_EXPERIMENT_HPP
