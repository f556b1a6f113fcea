#include "curvecount/predictors.hpp"

#include <cmath>
#include <stdexcept>

#include "curvecount/prime_field.hpp"

namespace curvecount {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

BigInt pow_int(std::uint32_t p, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

/// p^-e as a rational.
Rational inv_pow(std::uint32_t p, unsigned long e) { return Rational(BigInt(1), pow_int(p, e)); }

Rational pow_rational(const Rational& base, unsigned long e) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

unsigned long to_exponent(const BigInt& n) {
  if (n < 0 || !n.fits_ulong_p()) throw std::invalid_argument("exponent out of range");
  return n.get_ui();
}

}  // namespace

BigInt surface_point_count(const SurfaceModel& surface, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  require_prime(surface.p);
  const BigInt q = pow_int(surface.p, static_cast<unsigned long>(k));
  if (surface.tag == Surface::P2) return q * q + q + 1;
  return (q + 1) * (q + 1);
}

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
  int result = 1;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<BigInt> closed_points_from_counts(const std::vector<BigInt>& point_counts) {
  std::vector<BigInt> a;
  for (int m = 1; m <= static_cast<int>(point_counts.size()); ++m) {
    BigInt sum = 0;
    for (int e = 1; e <= m; ++e)
      if (m % e == 0) sum += mobius(m / e) * point_counts[static_cast<std::size_t>(e - 1)];
    if (sum % m != 0) throw std::logic_error("point counts are not consistent with a variety");
    a.push_back(sum / m);
  }
  return a;
}

ClosedPointCensus closed_point_census(const SurfaceModel& surface, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  std::vector<BigInt> n;
  for (int k = 1; k <= horizon; ++k) n.push_back(surface_point_count(surface, k));
  return ClosedPointCensus{surface, closed_points_from_counts(n)};
}

Rational zeta_exact(const SurfaceModel& surface, int s) {
  if (s < 3) throw std::invalid_argument("zeta of a surface converges only for s >= 3");
  require_prime(surface.p);
  const auto p = surface.p;
  const auto us = static_cast<unsigned long>(s);
  const Rational f0 = 1 - inv_pow(p, us);
  const Rational f1 = 1 - inv_pow(p, us - 1);
  const Rational f2 = 1 - inv_pow(p, us - 2);
  const Rational denom = surface.tag == Surface::P2 ? Rational(f0 * f1 * f2) : Rational(f0 * f1 * f1 * f2);
  return 1 / denom;
}

Rational zeta_truncated(const SurfaceModel& surface, int s, int horizon, ZetaDomain domain) {
  if (s < 1) throw std::invalid_argument("s must be positive");
  const auto census = closed_point_census(surface, horizon);
  // Each factor (1 - p^{-sm})^{-a_m} adds about a_m * s * m * log2(p) bits.
  const double log2p = std::log2(static_cast<double>(surface.p));
  double bits = 0;
  for (int m = 1; m <= horizon; ++m) bits += census.at(m).get_d() * s * m * log2p;
  if (bits > kZetaBitCap)
    throw CapExceeded("exact partial product to horizon " + std::to_string(horizon) + " needs ~" +
                      std::to_string(static_cast<long long>(bits)) + " bits; lower the horizon");
  Rational product = 1;
  for (int m = 1; m <= horizon; ++m) {
    if (m == 1 && domain == ZetaDomain::OpenComplement) continue;
    const Rational local = 1 - inv_pow(surface.p, static_cast<unsigned long>(s) * static_cast<unsigned long>(m));
    product *= pow_rational(1 / local, to_exponent(census.at(m)));
  }
  return product;
}

bool zeta_factorization_check(const SurfaceModel& surface, int s, int horizon, std::optional<BigInt> t_override) {
  const BigInt t = t_override.value_or(surface_point_count(surface, 1));
  const Rational lhs = zeta_truncated(surface, s, horizon, ZetaDomain::Full);
  const Rational rational_part = pow_rational(1 / (1 - inv_pow(surface.p, static_cast<unsigned long>(s))), to_exponent(t));
  return lhs == zeta_truncated(surface, s, horizon, ZetaDomain::OpenComplement) * rational_part;
}

Rational success_probability(std::uint32_t p) {
  require_prime(p);
  const BigInt P = p;
  Rational r(P + 1, P * P + P + 1);
  r.canonicalize();
  return r;
}

BigInt binomial_coefficient(const BigInt& n, const BigInt& k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), to_exponent(k));
  return r;
}

Rational predicted_pmf(const BigInt& t, const BigInt& s, std::uint32_t p) {
  if (t < 0 || s < 0 || s > t) throw std::invalid_argument("need 0 <= s <= t");
  const Rational r = success_probability(p);
  return Rational(binomial_coefficient(t, s)) * pow_rational(r, to_exponent(s)) *
         pow_rational(1 - r, to_exponent(t - s));
}

std::vector<Rational> predicted_pmf_table(const BigInt& t, std::uint32_t p) {
  std::vector<Rational> out;
  for (BigInt s = 0; s <= t; ++s) out.push_back(predicted_pmf(t, s, p));
  return out;
}

SieveCardinalities sieve_cardinalities(const BigInt& t, const BigInt& s, std::uint32_t p) {
  if (t < 0 || s < 0 || s > t) throw std::invalid_argument("need 0 <= s <= t");
  require_prime(p);
  const BigInt P = p;
  const BigInt in_w = P * P - 1;
  const BigInt off_w = P * P * P - P * P;
  BigInt a, b;
  mpz_pow_ui(a.get_mpz_t(), in_w.get_mpz_t(), to_exponent(s));
  mpz_pow_ui(b.get_mpz_t(), off_w.get_mpz_t(), to_exponent(t - s));
  return {binomial_coefficient(t, s) * a * b, pow_int(p, 3 * to_exponent(t))};
}

MeanVariance predicted_mean_variance(const SurfaceModel& surface) {
  const Rational n(surface_point_count(surface, 1));
  const Rational r = success_probability(surface.p);
  return {n * r, n * r * (1 - r)};
}

Rational ihara_lower_bound(std::uint32_t p, std::uint64_t l) {
  require_prime(p);
  if (!is_prime(l)) throw std::invalid_argument("l must be prime");
  if (l <= p) throw std::invalid_argument("l must exceed p");
  Rational b(BigInt(p - 1) * (BigInt(static_cast<unsigned long>(l)) + 1), BigInt(12));
  b.canonicalize();
  return b;
}

}  // namespace curvecount
