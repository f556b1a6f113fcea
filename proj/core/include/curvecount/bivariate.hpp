#ifndef CURVECOUNT_BIVARIATE_HPP
#define CURVECOUNT_BIVARIATE_HPP

#include <vector>

#include "curvecount/extension_field.hpp"
#include "curvecount/poly.hpp"
#include "curvecount/prime_field.hpp"

namespace curvecount {

/**
 * @brief Polynomial in F_p[x][y].
 *
 * ycoeffs[j] is the coefficient of y^j, itself a polynomial in x. Normalized
 * values have no trailing zero entries, so the zero polynomial is empty.
 */
struct BiPoly {
  std::vector<PolyFp> ycoeffs;

  bool is_zero() const noexcept { return ycoeffs.empty(); }
  int deg_y() const noexcept { return static_cast<int>(ycoeffs.size()) - 1; }
  int deg_x() const noexcept;
  /// Nonzero element of F_p.
  bool is_nonzero_constant() const noexcept { return ycoeffs.size() == 1 && ycoeffs[0].degree() == 0; }
  /// True when no coefficient involves x.
  bool is_univariate_in_y() const noexcept;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;
};

/// Arithmetic in F_p[x][y] with F_p[x] treated as the coefficient domain.
class BivariateRing {
 public:
  explicit BivariateRing(PrimeField field) : R_(field) {}

  const PrimeField& field() const noexcept { return R_.field(); }
  const PolyRing<PrimeField>& x_ring() const noexcept { return R_; }

  void normalize(BiPoly& a) const;
  /// Builds a polynomial from a dense grid grid[i][j] = coefficient of x^i y^j.
  BiPoly from_grid(const std::vector<std::vector<std::uint32_t>>& grid) const;
  BiPoly from_x(const PolyFp& c) const;
  BiPoly y() const;

  BiPoly add(const BiPoly& a, const BiPoly& b) const;
  BiPoly sub(const BiPoly& a, const BiPoly& b) const;
  BiPoly mul(const BiPoly& a, const BiPoly& b) const;
  BiPoly scale(const BiPoly& a, const PolyFp& c) const;

  /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b in y.
  BiPoly prem(const BiPoly& a, const BiPoly& b) const;
  /// Quotient a / b; throws std::domain_error when b does not divide a.
  BiPoly exact_div(const BiPoly& a, const BiPoly& b) const;
  /// Monic gcd in F_p[x] of all y-coefficients.
  PolyFp content(const BiPoly& a) const;
  BiPoly primitive_part(const BiPoly& a) const;
  /// Greatest common divisor, normalized so that the leading y-coefficient
  /// is monic in x. gcd(0, 0) = 0.
  BiPoly gcd(const BiPoly& a, const BiPoly& b) const;

  /**
   * Res_y(a, b) via the subresultant pseudo-remainder sequence. Vanishes
   * identically exactly when a and b share a factor of positive y-degree.
   * Both arguments need positive y-degree, otherwise std::invalid_argument.
   */
  PolyFp resultant_y(const BiPoly& a, const BiPoly& b) const;

  PrimeField::Element evaluate(const BiPoly& a, PrimeField::Element x, PrimeField::Element y) const;
  ExtensionField::Element evaluate(const ExtensionField& ext, const BiPoly& a, const ExtensionField::Element& x,
                                   const ExtensionField::Element& y) const;
  /// a(x0, y) as a polynomial in y over the extension.
  Poly<ExtensionField::Element> specialize_x(const ExtensionField& ext, const BiPoly& a,
                                             const ExtensionField::Element& x0) const;

 private:
  PolyRing<PrimeField> R_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_BIVARIATE_HPP
