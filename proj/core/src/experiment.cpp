#include "curvecount/experiment.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "curvecount/prime_field.hpp"
#include "curvecount/report.hpp"
#include "curvecount/smoothness.hpp"
#include "curvecount/statistics.hpp"

#ifndef CURVECOUNT_VERSION
#define CURVECOUNT_VERSION "0.0.0"
#endif

namespace curvecount {

RunMode parse_mode(const std::string& s) {
  if (s == "enumerate") return RunMode::Enumerate;
  if (s == "sample") return RunMode::Sample;
  throw std::invalid_argument("unknown mode '" + s + "' (expected enumerate or sample)");
}

std::string mode_name(RunMode m) { return m == RunMode::Enumerate ? "enumerate" : "sample"; }

std::string code_version() { return CURVECOUNT_VERSION; }

void ExperimentConfig::validate() const {
  if (!is_prime(p) || p >= (1U << 31U)) throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  if (mode == RunMode::Sample && sample_count < 1) throw std::invalid_argument("sample mode needs --samples >= 1");
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (segre_via_ambient && surface != Surface::SegreQuadric)
    throw std::invalid_argument("ambient sampling applies to the quadric only");
}

std::uint64_t chunk_seed(std::uint64_t master_seed, std::uint64_t chunk_index) {
  // splitmix64 finalizer over a combination of the two inputs.
  std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ULL * (chunk_index + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

PredictedBlock predicted_block(const SurfaceModel& surface) {
  const auto t = surface_point_count(surface, 1);
  const auto mv = predicted_mean_variance(surface);
  return PredictedBlock{t, success_probability(surface.p), mv.mean, mv.variance, 1 / zeta_exact(surface, 3),
                        predicted_pmf_table(t, surface.p)};
}

std::vector<Rational> ExperimentResult::empirical_pmf() const {
  std::vector<Rational> out;
  for (auto c : histogram) {
    out.push_back(n_smooth == 0 ? Rational(0)
                                : Rational(BigInt(static_cast<unsigned long>(c)),
                                           BigInt(static_cast<unsigned long>(n_smooth))));
    out.back().canonicalize();
  }
  return out;
}

double ExperimentResult::smooth_fraction_standard_error() const {
  if (!smooth_fraction) return 0.0;
  return proportion_standard_error(smooth_fraction->get_d(), n_total - n_not_a_curve);
}

std::pair<Rational, Rational> histogram_moments(const std::vector<std::uint64_t>& histogram) {
  BigInt n = 0, s1 = 0, s2 = 0;
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    const BigInt c = static_cast<unsigned long>(histogram[s]);
    const BigInt v = static_cast<unsigned long>(s);
    n += c;
    s1 += c * v;
    s2 += c * v * v;
  }
  if (n == 0) throw std::invalid_argument("empty histogram");
  Rational mean(s1, n);
  mean.canonicalize();
  Rational second(s2, n);
  second.canonicalize();
  return {mean, second - mean * mean};
}

namespace {

struct Tally {
  std::uint64_t total = 0, smooth = 0, singular = 0, zero_form = 0, vanishes = 0;
  std::vector<std::uint64_t> histogram;

  void add(const Verdict& v, int points) {
    ++total;
    switch (v.tag) {
      case VerdictTag::Smooth:
        ++smooth;
        ++histogram.at(static_cast<std::size_t>(points));
        break;
      case VerdictTag::Singular:
        ++singular;
        break;
      case VerdictTag::NotACurve:
        if (v.reason == NotACurveReason::VanishesOnSurface)
          ++vanishes;
        else
          ++zero_form;
        break;
    }
  }

  void merge(const Tally& o) {
    total += o.total;
    smooth += o.smooth;
    singular += o.singular;
    zero_form += o.zero_form;
    vanishes += o.vanishes;
    for (std::size_t s = 0; s < histogram.size(); ++s) histogram[s] += o.histogram[s];
  }
};

class Runner {
 public:
  explicit Runner(const ExperimentConfig& c)
      : c_(c), model_{c.surface, c.p}, table_(model_, c.degree), t_(table_.size()) {
    if (c.mode == RunMode::Enumerate) {
      if (c.surface == Surface::P2)
        plane_enum_.emplace(c.p, 2, c.degree, c.enumeration_cap);
      else if (c.segre_via_ambient)
        plane_enum_.emplace(c.p, 3, c.degree, c.enumeration_cap);
      else
        bi_enum_.emplace(c.p, c.degree, c.enumeration_cap);
      count_ = plane_enum_ ? plane_enum_->size() : bi_enum_->size();
    } else {
      count_ = c.sample_count;
    }
  }

  std::uint64_t count() const noexcept { return count_; }
  std::size_t t() const noexcept { return t_; }

  Tally run_chunk(std::uint64_t chunk) const {
    Tally tally;
    tally.histogram.assign(t_ + 1, 0);
    std::mt19937_64 rng(chunk_seed(c_.master_seed, chunk));
    const std::uint64_t begin = chunk * kChunkSize;
    const std::uint64_t end = std::min(count_, begin + kChunkSize);
    for (std::uint64_t i = begin; i < end; ++i) {
      if (c_.surface == Surface::P2) {
        const Form f = c_.mode == RunMode::Enumerate ? plane_enum_->at(i) : sample_form(c_.p, 2, c_.degree, rng);
        const Verdict v = is_smooth(model_, f);
        tally.add(v, v.is_smooth() ? table_.count_zeros(f.coeffs()) : 0);
      } else if (c_.segre_via_ambient) {
        const Form f = c_.mode == RunMode::Enumerate ? plane_enum_->at(i) : sample_form(c_.p, 3, c_.degree, rng);
        const Verdict v = is_smooth(model_, f);
        tally.add(v, v.is_smooth() ? table_.count_zeros(segre_restrict(f).grid()) : 0);
      } else {
        const BiForm f = c_.mode == RunMode::Enumerate ? bi_enum_->at(i) : sample_biform(c_.p, c_.degree, rng);
        const Verdict v = is_smooth(model_, f);
        tally.add(v, v.is_smooth() ? table_.count_zeros(f.grid()) : 0);
      }
    }
    return tally;
  }

 private:
  const ExperimentConfig& c_;
  SurfaceModel model_;
  RationalPointTable table_;
  std::size_t t_;
  std::optional<FormEnumerator> plane_enum_;
  std::optional<BiFormEnumerator> bi_enum_;
  std::uint64_t count_ = 0;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const Runner runner(config);
  const std::uint64_t chunks = (runner.count() + kChunkSize - 1) / kChunkSize;
  std::vector<Tally> partial(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        partial[c] = runner.run_chunk(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(config.workers, std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  Tally total;
  total.histogram.assign(runner.t() + 1, 0);
  for (const auto& part : partial) total.merge(part);

  const SurfaceModel model{config.surface, config.p};
  ExperimentResult r;
  r.config = config;
  r.n_total = total.total;
  r.n_smooth = total.smooth;
  r.n_singular = total.singular;
  r.n_zero_form = total.zero_form;
  r.n_vanishes_on_surface = total.vanishes;
  r.n_not_a_curve = total.zero_form + total.vanishes;
  r.histogram = std::move(total.histogram);
  r.predicted = predicted_block(model);
  if (r.n_smooth > 0) {
    auto [m, v] = histogram_moments(r.histogram);
    r.mean = m;
    r.variance = v;
    r.tv_to_predicted = tv_distance(r.empirical_pmf(), r.predicted.pmf);
  }
  if (r.n_total > r.n_not_a_curve) {
    Rational f(BigInt(static_cast<unsigned long>(r.n_smooth)),
               BigInt(static_cast<unsigned long>(r.n_total - r.n_not_a_curve)));
    f.canonicalize();
    r.smooth_fraction = f;
  }
  r.code_version = code_version();
  r.run_id = digest(config_json(config).dump());
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace curvecount
