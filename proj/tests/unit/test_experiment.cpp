#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "curvecount/experiment.hpp"
#include "curvecount/report.hpp"
#include "curvecount/smoothness.hpp"
#include "curvecount/statistics.hpp"

using namespace curvecount;

namespace {

ExperimentConfig enumerate(std::uint32_t p, Surface s, int d) {
  ExperimentConfig c;
  c.p = p;
  c.surface = s;
  c.degree = d;
  c.mode = RunMode::Enumerate;
  return c;
}

ExperimentConfig sample(std::uint32_t p, Surface s, int d, std::uint64_t n, std::uint64_t seed) {
  ExperimentConfig c = enumerate(p, s, d);
  c.mode = RunMode::Sample;
  c.sample_count = n;
  c.master_seed = seed;
  return c;
}

void check_invariants(const ExperimentResult& r) {
  std::uint64_t hist_total = 0;
  for (auto c : r.histogram) hist_total += c;
  CHECK(hist_total == r.n_smooth);
  CHECK(r.n_smooth + r.n_singular + r.n_not_a_curve == r.n_total);
  CHECK(r.n_zero_form + r.n_vanishes_on_surface == r.n_not_a_curve);
  if (r.n_smooth > 0) {
    const auto [m, v] = histogram_moments(r.histogram);
    CHECK(*r.mean == m);
    CHECK(*r.variance == v);
    CHECK(*r.tv_to_predicted >= 0);
    CHECK(*r.tv_to_predicted <= 1);
  }
}

}  // namespace

TEST_SUITE("experiment") {
  TEST_CASE("lines over F_2") {
    const auto r = run_experiment(enumerate(2, Surface::P2, 1));
    check_invariants(r);
    CHECK(r.n_total == 8);
    CHECK(r.n_not_a_curve == 1);
    CHECK(r.n_smooth == 7);
    CHECK(r.histogram == std::vector<std::uint64_t>{0, 0, 0, 7, 0, 0, 0, 0});
    CHECK(*r.mean == 3);
    CHECK(*r.variance == 0);
    const BinomialModel B(7, success_probability(2));
    CHECK(*r.tv_to_predicted == 1 - B.pmf(3));
    CHECK(*r.smooth_fraction == 1);
  }

  TEST_CASE("exhaustive runs match the brute-force oracle form by form") {
    for (int d : {2, 3}) {
      const auto r = run_experiment(enumerate(2, Surface::P2, d));
      check_invariants(r);
      CHECK(r.n_total == space_size(2, 2, d));
      const SurfaceModel S{Surface::P2, 2};
      const RationalPointTable table(S, d);
      std::vector<std::uint64_t> hist(8, 0);
      std::uint64_t smooth = 0, not_curve = 0;
      FormEnumerator(2, 2, d).for_each([&](const Form& f) {
        const auto v = brute_force_singular(S, f, oracle_completeness_bound(Surface::P2, d));
        if (v.tag == VerdictTag::NotACurve) ++not_curve;
        if (v.tag != VerdictTag::Smooth) return;
        ++smooth;
        ++hist[static_cast<std::size_t>(table.count_zeros(f.coeffs()))];
      });
      CHECK(r.n_smooth == smooth);
      CHECK(r.n_not_a_curve == not_curve);
      CHECK(r.histogram == hist);
    }
  }

  TEST_CASE("worker count does not change the result") {
    auto c = sample(2, Surface::P2, 5, 3000, 7);
    c.workers = 1;
    const auto one = run_experiment(c);
    c.workers = 4;
    const auto four = run_experiment(c);
    CHECK(result_json(one, false).dump() == result_json(four, false).dump());
    CHECK(histogram_csv(one) == histogram_csv(four));
    CHECK(one.run_id == four.run_id);
    c.master_seed = 8;
    CHECK(run_experiment(c).run_id != one.run_id);
  }

  TEST_CASE("ambient and direct quadric sampling give the same law") {
    // The restriction S_3(2) -> bidegree (2, 2) forms is onto with a kernel of
    // size 2, so after removing NotACurve both enumerations see each section
    // equally often.
    const auto direct = run_experiment(enumerate(2, Surface::SegreQuadric, 2));
    auto c = enumerate(2, Surface::SegreQuadric, 2);
    c.segre_via_ambient = true;
    const auto ambient = run_experiment(c);
    check_invariants(direct);
    check_invariants(ambient);
    CHECK(ambient.n_total == 1024);
    CHECK(direct.n_total == 512);
    CHECK(ambient.n_vanishes_on_surface == 1);
    CHECK(*ambient.smooth_fraction == *direct.smooth_fraction);
    CHECK(ambient.empirical_pmf() == direct.empirical_pmf());
    CHECK(*ambient.tv_to_predicted == *direct.tv_to_predicted);
    // Sampled comparison at bidegree (3, 3): total variation over
    // (verdict, point count) stays within sampling noise.
    auto s1 = sample(2, Surface::SegreQuadric, 3, 4000, 3);
    auto s2 = s1;
    s2.segre_via_ambient = true;
    const auto a = run_experiment(s1), b = run_experiment(s2);
    const double fa = a.smooth_fraction->get_d(), fb = b.smooth_fraction->get_d();
    CHECK(std::abs(fa - fb) < 4 * std::sqrt(2.0) * proportion_standard_error((fa + fb) / 2, 4000));
  }

  TEST_CASE("quadric sample histogram support") {
    const auto r = run_experiment(sample(2, Surface::SegreQuadric, 3, 1000, 1));
    check_invariants(r);
    CHECK(r.histogram.size() == 10);
  }

  TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(run_experiment(enumerate(4, Surface::P2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(run_experiment(sample(2, Surface::P2, 2, 0, 1)), std::invalid_argument);
    auto c = enumerate(2, Surface::P2, 0);
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = enumerate(3, Surface::P2, 6);
    CHECK_THROWS_AS(run_experiment(c), CapExceeded);
    c = enumerate(2, Surface::P2, 2);
    c.segre_via_ambient = true;
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    CHECK(parse_mode("sample") == RunMode::Sample);
    CHECK_THROWS_AS(parse_mode("all"), std::invalid_argument);
  }

  TEST_CASE("chunk seeds are distinct") {
    std::set<std::uint64_t> seen;
    for (std::uint64_t m = 0; m < 4; ++m)
      for (std::uint64_t c = 0; c < 1000; ++c) seen.insert(chunk_seed(m, c));
    CHECK(seen.size() == 4000);
  }

  TEST_CASE("reports") {
    const auto r = run_experiment(enumerate(2, Surface::P2, 1));
    const auto j = result_json(r);
    CHECK(j["n_total"] == 8);
    CHECK(j["histogram"][3] == 7);
    CHECK(j["mean"]["exact"] == "3");
    CHECK(j["predicted"]["r"] == "3/7");
    CHECK(j["predicted"]["smooth_probability"] == "21/64");
    CHECK(j.contains("timing"));
    CHECK_FALSE(result_json(r, false).contains("timing"));
    const auto csv = histogram_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,count,empirical_prob,predicted_prob");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 8);
    const auto pj = predictor_json(SurfaceModel{Surface::P2, 3});
    CHECK(pj["smooth_probability"] == "416/729");
    CHECK(pj["pmf"].size() == 14);
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc").size() == 16);
  }
}
