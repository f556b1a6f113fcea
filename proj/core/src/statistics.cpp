#include "curvecount/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvecount {

BinomialModel::BinomialModel(std::uint64_t n, Rational r) : n_(n), r_(std::move(r)) {
  r_.canonicalize();
  if (r_ < 0 || r_ > 1) throw std::invalid_argument("success probability must lie in [0, 1]");
}

Rational BinomialModel::pmf(std::uint64_t s) const {
  if (s > n_) throw std::invalid_argument("s exceeds the number of trials");
  const BigInt n(static_cast<unsigned long>(n_));
  const BigInt k(static_cast<unsigned long>(s));
  const Rational q = 1 - r_;
  BigInt a, b, c, d;
  mpz_pow_ui(a.get_mpz_t(), r_.get_num_mpz_t(), s);
  mpz_pow_ui(b.get_mpz_t(), r_.get_den_mpz_t(), s);
  mpz_pow_ui(c.get_mpz_t(), q.get_num_mpz_t(), n_ - s);
  mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), n_ - s);
  Rational out(binomial_coefficient(n, k) * a * c, b * d);
  out.canonicalize();
  return out;
}

Rational BinomialModel::cdf(std::uint64_t s) const {
  if (s > n_) throw std::invalid_argument("s exceeds the number of trials");
  Rational acc = 0;
  for (std::uint64_t k = 0; k <= s; ++k) acc += pmf(k);
  return acc;
}

std::vector<Rational> BinomialModel::pmf_table() const {
  std::vector<Rational> out;
  out.reserve(n_ + 1);
  for (std::uint64_t k = 0; k <= n_; ++k) out.push_back(pmf(k));
  return out;
}

Rational tv_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions on different supports");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += abs(a[i] - b[i]);
  return sum / 2;
}

double tv_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions on different supports");
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum / 2;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double gaussian_interval(double a, double b) {
  if (!(a <= b)) throw std::invalid_argument("interval needs a <= b");
  if (a == b) return 0.0;
  // Subtract in whichever tail keeps both terms small.
  if (a >= 0) return normal_cdf(-a) - normal_cdf(-b);
  if (b <= 0) return normal_cdf(b) - normal_cdf(a);
  return 1.0 - normal_cdf(a) - normal_cdf(-b);
}

double ks_normalized_binomial(std::uint64_t n, const Rational& r) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (r <= 0 || r >= 1) throw std::invalid_argument("r must lie strictly between 0 and 1");
  const Rational q = 1 - r;
  // pmf(k) = C(n,k) a^k b^(n-k) / den^n with r = a/den, 1 - r = b/den.
  const BigInt den = r.get_den();
  const BigInt a = r.get_num();
  const BigInt b = den - a;
  BigInt total;
  mpz_pow_ui(total.get_mpz_t(), den.get_mpz_t(), n);
  BigInt term;
  mpz_pow_ui(term.get_mpz_t(), b.get_mpz_t(), n);

  const Rational nr = Rational(BigInt(static_cast<unsigned long>(n))) * r;
  const double mean = nr.get_d();
  const double sigma = std::sqrt(Rational(nr * q).get_d());
  BigInt cumulative = 0;
  double below = 0.0;
  double sup = 0.0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    cumulative += term;
    const double above = k == n ? 1.0 : mpq_class(cumulative, total).get_d();
    const double phi = normal_cdf((static_cast<double>(k) - mean) / sigma);
    sup = std::max({sup, std::abs(below - phi), std::abs(above - phi)});
    below = above;
    if (k < n) {
      term *= static_cast<unsigned long>(n - k);
      term *= a;
      term /= static_cast<unsigned long>(k + 1);
      term /= b;
    }
  }
  return sup;
}

namespace {

bool normalized_in(std::uint64_t s, double mean, double sd, double a, double b) {
  const double z = (static_cast<double>(s) - mean) / sd;
  return z >= a && z <= b;
}

}  // namespace

Rational normalized_interval_fraction(const std::vector<std::uint64_t>& histogram, const Rational& mean,
                                      const Rational& variance, double a, double b) {
  if (variance <= 0) throw std::invalid_argument("zero variance: normalization undefined");
  const double m = mean.get_d();
  const double sd = std::sqrt(variance.get_d());
  std::uint64_t total = 0, inside = 0;
  for (std::size_t s = 0; s < histogram.size(); ++s) {
    total += histogram[s];
    if (normalized_in(s, m, sd, a, b)) inside += histogram[s];
  }
  if (total == 0) throw std::invalid_argument("empty histogram");
  Rational out(BigInt(static_cast<unsigned long>(inside)), BigInt(static_cast<unsigned long>(total)));
  out.canonicalize();
  return out;
}

Rational normalized_binomial_mass(const BinomialModel& model, double a, double b) {
  if (model.variance() <= 0) throw std::invalid_argument("zero variance: normalization undefined");
  const double m = model.mean().get_d();
  const double sd = std::sqrt(model.variance().get_d());
  Rational mass = 0;
  for (std::uint64_t s = 0; s <= model.n(); ++s)
    if (normalized_in(s, m, sd, a, b)) mass += model.pmf(s);
  return mass;
}

double proportion_standard_error(double fraction, std::uint64_t n) {
  if (n == 0) return 0.0;
  return std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(n));
}

}  // namespace curvecount
