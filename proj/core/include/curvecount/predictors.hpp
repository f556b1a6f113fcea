#ifndef CURVECOUNT_PREDICTORS_HPP
#define CURVECOUNT_PREDICTORS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvecount/forms.hpp"

namespace curvecount {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "num/den", or just "num" for integers.
std::string to_string(const Rational& q);
/// Parses "num/den" or "num"; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

/// |X(F_{p^k})|.
BigInt surface_point_count(const SurfaceModel& surface, int k);

/// a_m = number of closed points of degree m, m = 1..horizon.
struct ClosedPointCensus {
  SurfaceModel surface;
  std::vector<BigInt> counts;  ///< counts[m - 1] = a_m

  int horizon() const noexcept { return static_cast<int>(counts.size()); }
  const BigInt& at(int m) const { return counts.at(static_cast<std::size_t>(m - 1)); }
};

int mobius(int n);

/// Möbius inversion of arbitrary point counts N_1..N_h into closed-point counts.
std::vector<BigInt> closed_points_from_counts(const std::vector<BigInt>& point_counts);

ClosedPointCensus closed_point_census(const SurfaceModel& surface, int horizon);

/// Exact zeta value; s >= 3.
Rational zeta_exact(const SurfaceModel& surface, int s);

enum class ZetaDomain { Full, OpenComplement };

/// Size limit, in bits, for exact partial Euler products.
inline constexpr double kZetaBitCap = 1u << 27U;

/**
 * Partial Euler product over closed points of degree <= horizon. With
 * OpenComplement the F_p-rational points are left out (U = X minus X(F_p)).
 * Throws CapExceeded when the exact value would be unreasonably large.
 */
Rational zeta_truncated(const SurfaceModel& surface, int s, int horizon, ZetaDomain domain = ZetaDomain::Full);

/// Checks zeta_X = zeta_U * (1 - p^-s)^-t on the partial products of degree
/// <= horizon. t defaults to |X(F_p)|.
bool zeta_factorization_check(const SurfaceModel& surface, int s, int horizon,
                              std::optional<BigInt> t_override = std::nullopt);

/// r = (p + 1) / (p^2 + p + 1).
Rational success_probability(std::uint32_t p);

Rational predicted_pmf(const BigInt& t, const BigInt& s, std::uint32_t p);
/// Pmf over s = 0..t.
std::vector<Rational> predicted_pmf_table(const BigInt& t, std::uint32_t p);

struct SieveCardinalities {
  BigInt prescribed;  ///< sum over |W| = s of |T(W)|
  BigInt total;       ///< |H^0(Z, O_Z)| = p^{3t}
};
SieveCardinalities sieve_cardinalities(const BigInt& t, const BigInt& s, std::uint32_t p);

struct MeanVariance {
  Rational mean;
  Rational variance;
};
MeanVariance predicted_mean_variance(const SurfaceModel& surface);

/// (p - 1)(l + 1) / 12; requires l prime and l > p.
Rational ihara_lower_bound(std::uint32_t p, std::uint64_t l);

BigInt binomial_coefficient(const BigInt& n, const BigInt& k);

}  // namespace curvecount

#endif  // CURVECOUNT_PREDICTORS_HPP
