#include "commands.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "curvecount/report.hpp"
#include "curvecount/smoothness.hpp"
#include "curvecount/statistics.hpp"

namespace curvecount::cli {

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write " + path);
  f << text;
  if (!f) throw std::invalid_argument("failed writing " + path);
}

std::string basename_of(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Json witness_json(const Witness& w) {
  Json coords = Json::array();
  for (const auto& c : w.coords) coords.push_back(c);
  return Json{{"chart", w.chart}, {"m", w.field.k}, {"modulus", w.field.modulus}, {"coords", coords}};
}

}  // namespace

int cmd_predict(const PredictOptions& o, std::ostream& out) {
  const SurfaceModel s{parse_surface(o.surface), o.p};
  out << predictor_json(s).dump(2) << '\n';
  return kOk;
}

int cmd_run(const RunOptions& o, std::ostream& out) {
  ExperimentConfig c = o.config;
  c.surface = parse_surface(o.surface);
  c.mode = parse_mode(o.mode);
  const std::string started = utc_now();
  const ExperimentResult r = run_experiment(c);
  Json doc = result_json(r);
  if (o.out.empty()) {
    out << doc.dump(2) << '\n';
    return kOk;
  }
  const std::string json_path = o.out + ".json";
  const std::string csv_path = o.out + ".csv";
  const std::string manifest_path = o.out + ".manifest.json";
  doc["provenance"]["manifest"] = basename_of(manifest_path);
  write_file(json_path, doc.dump(2) + "\n");
  write_file(csv_path, histogram_csv(r));
  const Json manifest{{"schema_version", kSchemaVersion},
                      {"command_line", o.command_line},
                      {"config", config_json(c)},
                      {"workers", c.workers},
                      {"run_id", r.run_id},
                      {"code_version", r.code_version},
                      {"started_at", started},
                      {"finished_at", utc_now()},
                      {"outputs", {{"result", basename_of(json_path)}, {"histogram", basename_of(csv_path)}}}};
  write_file(manifest_path, manifest.dump(2) + "\n");
  out << "forms " << r.n_total << ", smooth " << r.n_smooth << ", singular " << r.n_singular << ", not a curve "
      << r.n_not_a_curve << '\n';
  if (r.smooth_fraction) out << "smooth fraction " << r.smooth_fraction->get_d() << " (predicted "
                             << r.predicted.smooth_probability.get_d() << ")\n";
  if (r.tv_to_predicted) out << "tv to binomial " << r.tv_to_predicted->get_d() << '\n';
  if (r.degenerate()) out << "warning: every form was NotACurve\n";
  out << "wrote " << json_path << ", " << csv_path << ", " << manifest_path << '\n';
  return kOk;
}

int cmd_clt(const CltOptions& o, std::ostream& out) {
  if (o.n_list.empty()) throw std::invalid_argument("--n-list needs at least one value");
  const Rational r = success_probability(o.p);
  out << "n,ks\n";
  for (auto n : o.n_list) {
    if (n < 1) throw std::invalid_argument("n values must be positive");
    out << n << ',' << std::setprecision(12) << ks_normalized_binomial(n, r) << '\n';
  }
  return kOk;
}

int cmd_zeta(const ZetaOptions& o, std::ostream& out) {
  const SurfaceModel s{parse_surface(o.surface), o.p};
  if (o.horizon < 1) throw std::invalid_argument("--horizon must be at least 1");
  const Rational exact = zeta_exact(s, o.s);
  Json rows = Json::array();
  for (int h = 1; h <= o.horizon; ++h) {
    const Rational partial = zeta_truncated(s, o.s, h);
    rows.push_back(Json{{"horizon", h},
                        {"partial", partial.get_d()},
                        {"gap", Rational(exact - partial).get_d()},
                        {"factorization_check", zeta_factorization_check(s, o.s, h)}});
  }
  out << Json{{"p", o.p},
              {"surface", surface_name(s.tag)},
              {"s", o.s},
              {"exact", rational_json(exact)},
              {"rows", rows}}
             .dump(2)
      << '\n';
  return kOk;
}

int cmd_oracle(const OracleOptions& o, std::ostream& out) {
  const SurfaceModel s{parse_surface(o.surface), o.p};
  if (o.exhaustive == (o.count > 0)) throw std::invalid_argument("give exactly one of --exhaustive or --count");
  if (o.degree < 1) throw std::invalid_argument("degree must be at least 1");
  const int m_max = oracle_completeness_bound(s.tag, o.degree);
  std::uint64_t forms = 0, agree = 0, witnesses = 0, verified = 0;
  Json disagreements = Json::array();
  Json failed_witnesses = Json::array();
  auto check = [&](const auto& f) {
    const Verdict engine = is_smooth(s, f);
    const Verdict brute = brute_force_singular(s, f, m_max, o.point_cap);
    ++forms;
    if (engine.tag == brute.tag)
      ++agree;
    else
      disagreements.push_back(Json{{"form", to_string(f)}, {"engine", to_string(engine.tag)}, {"oracle", to_string(brute.tag)}});
    for (const auto* v : {&engine, &brute}) {
      if (!v->witness) continue;
      ++witnesses;
      if (verify_witness(s, f, *v->witness))
        ++verified;
      else
        failed_witnesses.push_back(Json{{"form", to_string(f)}, {"witness", witness_json(*v->witness)}});
    }
  };
  // Refuse before doing any work if the complete scan is out of reach.
  oracle_scan_points(o.p, m_max, o.point_cap);
  std::mt19937_64 rng(o.seed);
  if (s.tag == Surface::P2) {
    if (o.exhaustive) {
      FormEnumerator(o.p, 2, o.degree, o.enumeration_cap).for_each(check);
    } else {
      for (std::uint64_t i = 0; i < o.count; ++i) check(sample_form(o.p, 2, o.degree, rng));
    }
  } else {
    if (o.exhaustive) {
      const BiFormEnumerator e(o.p, o.degree, o.enumeration_cap);
      for (std::uint64_t i = 0; i < e.size(); ++i) check(e.at(i));
    } else {
      for (std::uint64_t i = 0; i < o.count; ++i) check(sample_biform(o.p, o.degree, rng));
    }
  }
  out << Json{{"p", o.p},
              {"surface", surface_name(s.tag)},
              {"degree", o.degree},
              {"m_max", m_max},
              {"forms", forms},
              {"agree", agree},
              {"disagreements", disagreements},
              {"witness_audit", {{"checked", witnesses}, {"verified", verified}, {"failed", failed_witnesses}}}}
             .dump(2)
      << '\n';
  return kOk;
}

int guarded(const std::function<int()>& fn, std::ostream& err) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    err << "error: resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const EliminationDegenerate& e) {
    err << "error: degenerate elimination: " << e.what() << '\n';
    return kDegenerate;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace curvecount::cli
