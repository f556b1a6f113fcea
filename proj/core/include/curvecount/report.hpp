#ifndef CURVECOUNT_REPORT_HPP
#define CURVECOUNT_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "curvecount/experiment.hpp"
#include "curvecount/predictors.hpp"

namespace curvecount {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"exact": "num/den", "approx": double}
Json rational_json(const Rational& q);

Json config_json(const ExperimentConfig& config);
/// Predictor report for one surface.
Json predictor_json(const SurfaceModel& surface);
/// Result document; the "timing" block is the only nonreproducible part.
Json result_json(const ExperimentResult& result, bool include_timing = true);
/// Histogram CSV with columns s,count,empirical_prob,predicted_prob.
std::string histogram_csv(const ExperimentResult& result);

/// Stable 64-bit FNV-1a digest, rendered as 16 hex digits.
std::string digest(const std::string& text);

}  // namespace curvecount

#endif  // CURVECOUNT_REPORT_HPP
