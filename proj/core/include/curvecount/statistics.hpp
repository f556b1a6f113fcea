#ifndef CURVECOUNT_STATISTICS_HPP
#define CURVECOUNT_STATISTICS_HPP

#include <cstdint>
#include <vector>

#include "curvecount/predictors.hpp"

namespace curvecount {

/// n tosses of a coin with exact success probability r.
class BinomialModel {
 public:
  BinomialModel(std::uint64_t n, Rational r);

  std::uint64_t n() const noexcept { return n_; }
  const Rational& r() const noexcept { return r_; }

  Rational pmf(std::uint64_t s) const;
  Rational cdf(std::uint64_t s) const;
  /// pmf at s = 0..n.
  std::vector<Rational> pmf_table() const;
  Rational mean() const { return Rational(BigInt(static_cast<unsigned long>(n_))) * r_; }
  Rational variance() const { return mean() * (1 - r_); }

 private:
  std::uint64_t n_;
  Rational r_;
};

/// Half the L1 distance; both vectors index the same support.
Rational tv_distance(const std::vector<Rational>& a, const std::vector<Rational>& b);
double tv_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Standard normal cdf.
double normal_cdf(double x);
/// Standard normal mass of [a, b].
double gaussian_interval(double a, double b);

/// Sup distance between the cdf of (B - nr)/sqrt(nr(1-r)) and the normal cdf.
double ks_normalized_binomial(std::uint64_t n, const Rational& r);

/**
 * Fraction of histogram mass with (s - mean)/sqrt(variance) in [a, b].
 * histogram[s] counts observations of value s. Throws
 * std::invalid_argument when variance is zero.
 */
Rational normalized_interval_fraction(const std::vector<std::uint64_t>& histogram, const Rational& mean,
                                      const Rational& variance, double a, double b);

/// Mass of the normalized binomial (with its own mean and variance) in [a, b].
Rational normalized_binomial_mass(const BinomialModel& model, double a, double b);

/// Standard error of a proportion estimated from n trials.
double proportion_standard_error(double fraction, std::uint64_t n);

}  // namespace curvecount

#endif  // CURVECOUNT_STATISTICS_HPP
