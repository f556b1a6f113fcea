#include "curvecount/report.hpp"

#include <cstdio>
#include <sstream>

#include "curvecount/statistics.hpp"

namespace curvecount {

Json rational_json(const Rational& q) { return Json{{"exact", to_string(q)}, {"approx", q.get_d()}}; }

namespace {

Json optional_rational(const std::optional<Rational>& q) { return q ? rational_json(*q) : Json(nullptr); }

}  // namespace

Json config_json(const ExperimentConfig& c) {
  Json j{{"p", c.p},
         {"surface", surface_name(c.surface)},
         {"degree", c.degree},
         {"mode", mode_name(c.mode)},
         {"sample_count", c.mode == RunMode::Sample ? Json(c.sample_count) : Json(nullptr)},
         {"master_seed", c.master_seed},
         {"enumeration_cap", c.enumeration_cap},
         {"chunk_size", kChunkSize}};
  if (c.surface == Surface::SegreQuadric) j["segre_via_ambient"] = c.segre_via_ambient;
  return j;
}

Json predictor_json(const SurfaceModel& surface) {
  const auto b = predicted_block(surface);
  Json pmf = Json::array();
  for (std::size_t s = 0; s < b.pmf.size(); ++s)
    pmf.push_back(Json{{"s", s}, {"exact", to_string(b.pmf[s])}, {"approx", b.pmf[s].get_d()}});
  return Json{{"p", surface.p},
              {"surface", surface_name(surface.tag)},
              {"t", b.t.get_str()},
              {"r", to_string(b.r)},
              {"r_approx", b.r.get_d()},
              {"mean", to_string(b.mean)},
              {"mean_approx", b.mean.get_d()},
              {"variance", to_string(b.variance)},
              {"variance_approx", b.variance.get_d()},
              {"smooth_probability", to_string(b.smooth_probability)},
              {"smooth_probability_approx", b.smooth_probability.get_d()},
              {"pmf", pmf}};
}

Json result_json(const ExperimentResult& r, bool include_timing) {
  Json hist = Json::array();
  for (std::size_t s = 0; s < r.histogram.size(); ++s) hist.push_back(r.histogram[s]);
  Json smooth_fraction = optional_rational(r.smooth_fraction);
  if (r.smooth_fraction) smooth_fraction["standard_error"] = r.smooth_fraction_standard_error();
  Json j{{"schema_version", kSchemaVersion},
         {"config", config_json(r.config)},
         {"n_total", r.n_total},
         {"n_smooth", r.n_smooth},
         {"n_singular", r.n_singular},
         {"n_not_a_curve", r.n_not_a_curve},
         {"not_a_curve_reasons", {{"zero_form", r.n_zero_form}, {"vanishes_on_surface", r.n_vanishes_on_surface}}},
         {"degenerate", r.degenerate()},
         {"histogram", hist},
         {"mean", optional_rational(r.mean)},
         {"variance", optional_rational(r.variance)},
         {"smooth_fraction", smooth_fraction},
         {"tv_to_predicted", optional_rational(r.tv_to_predicted)},
         {"predicted", predictor_json(SurfaceModel{r.config.surface, r.config.p})},
         {"provenance",
          {{"code_version", r.code_version}, {"run_id", r.run_id}, {"master_seed", r.config.master_seed}}}};
  if (include_timing)
    j["timing"] = Json{{"elapsed_seconds", r.elapsed_seconds}, {"workers", r.config.workers}};
  return j;
}

std::string histogram_csv(const ExperimentResult& r) {
  std::ostringstream out;
  out << "s,count,empirical_prob,predicted_prob\n";
  const auto emp = r.empirical_pmf();
  char buf[64];
  for (std::size_t s = 0; s < r.histogram.size(); ++s) {
    out << s << ',' << r.histogram[s] << ',';
    std::snprintf(buf, sizeof buf, "%.10g", emp[s].get_d());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.10g", r.predicted.pmf[s].get_d());
    out << buf << '\n';
  }
  return out.str();
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace curvecount
