#ifndef CURVECOUNT_FORMS_HPP
#define CURVECOUNT_FORMS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "curvecount/bivariate.hpp"
#include "curvecount/extension_field.hpp"
#include "curvecount/prime_field.hpp"

namespace curvecount {

/// Raised when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 28U;

using Exponents = std::vector<std::uint8_t>;

/**
 * @brief Exponent vectors of total degree d in n_vars variables.
 *
 * Ordered graded-lex: for a fixed degree this is lexicographic with the
 * exponent of x0 most significant and larger exponents first, so x0^d is
 * index 0 and x_{n}^d is last.
 */
class MonomialBasis {
 public:
  MonomialBasis(int n_vars, int degree);

  int n_vars() const noexcept { return n_vars_; }
  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return exps_.size(); }
  const Exponents& operator[](std::size_t i) const { return exps_[i]; }
  /// Index of an exponent vector; throws std::out_of_range when absent.
  std::size_t index_of(const Exponents& e) const;

 private:
  int n_vars_;
  int degree_;
  std::vector<Exponents> exps_;
  std::map<Exponents, std::size_t> index_;
};

/// Shared, cached basis for (n_vars, degree).
std::shared_ptr<const MonomialBasis> monomial_basis(int n_vars, int degree);

/// Binomial coefficient as an exact integer.
mpz_class binomial(unsigned long n, unsigned long k);

/// |S(d)| = p^C(d+n, n) for forms of degree d in n+1 variables.
mpz_class space_size(std::uint32_t p, int n, int d);

/// Dense homogeneous form of degree d in n+1 variables over F_p.
class Form {
 public:
  /// Zero form.
  Form(std::uint32_t p, int n_vars, int degree);
  Form(std::uint32_t p, int n_vars, int degree, std::vector<std::uint32_t> coeffs);
  /// Builds from (coefficient, exponents) terms; repeated monomials add up.
  static Form from_terms(std::uint32_t p, const std::vector<std::pair<std::uint32_t, Exponents>>& terms);

  std::uint32_t p() const noexcept { return p_; }
  int n_vars() const noexcept { return basis_->n_vars(); }
  int degree() const noexcept { return basis_->degree(); }
  const MonomialBasis& basis() const noexcept { return *basis_; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
  std::uint32_t coeff(const Exponents& e) const { return coeffs_[basis_->index_of(e)]; }
  bool is_zero() const noexcept;

  Form operator+(const Form& o) const;
  Form operator*(const Form& o) const;
  Form scaled(std::uint32_t c) const;

  friend bool operator==(const Form& a, const Form& b) {
    return a.p_ == b.p_ && a.n_vars() == b.n_vars() && a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  std::uint32_t p_;
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<std::uint32_t> coeffs_;
};

/// Canonical text, e.g. "x0^3*x1 + 2*x0*x2^3"; the zero form is "0".
std::string to_string(const Form& f);

/// Index-addressable stream of all forms of S(d) in coefficient-vector
/// lexicographic order (first coefficient most significant).
class FormEnumerator {
 public:
  /// Throws CapExceeded when |S(d)| exceeds cap.
  FormEnumerator(std::uint32_t p, int n, int d, std::uint64_t cap = kDefaultEnumerationCap);
  std::uint64_t size() const noexcept { return size_; }
  Form at(std::uint64_t index) const;
  void for_each(const std::function<void(const Form&)>& fn) const;

 private:
  std::uint32_t p_;
  int n_vars_;
  int degree_;
  std::size_t length_;
  std::uint64_t size_;
};

/// Each coefficient independently uniform over F_p.
Form sample_form(std::uint32_t p, int n, int d, std::mt19937_64& rng);

std::vector<Form> partials(const Form& f);
/// F with the chart variable set to 1, as a polynomial in the two remaining
/// variables (x = first, y = second). Requires three variables.
BiPoly dehomogenize(const Form& f, int chart);
/// F(sum_j M[0][j] x_j, ..., sum_j M[n][j] x_j).
Form linear_substitute(const Form& f, const std::vector<std::vector<std::uint32_t>>& matrix);
Form power(const Form& f, unsigned e);

/**
 * @brief Bihomogeneous form on P^1 x P^1.
 *
 * coeff(i, j) multiplies u0^(du-i) u1^i v0^(dv-j) v1^j.
 */
class BiForm {
 public:
  BiForm(std::uint32_t p, int deg_u, int deg_v);
  BiForm(std::uint32_t p, int deg_u, int deg_v, std::vector<std::uint32_t> grid);

  std::uint32_t p() const noexcept { return p_; }
  int deg_u() const noexcept { return du_; }
  int deg_v() const noexcept { return dv_; }
  std::uint32_t coeff(int i, int j) const { return grid_[idx(i, j)]; }
  void set(int i, int j, std::uint32_t c) { grid_[idx(i, j)] = c % p_; }
  const std::vector<std::uint32_t>& grid() const noexcept { return grid_; }
  bool is_zero() const noexcept;

  BiForm operator+(const BiForm& o) const;

  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dv_ + 1) + static_cast<std::size_t>(j);
  }

  std::uint32_t p_;
  int du_;
  int dv_;
  std::vector<std::uint32_t> grid_;
};

std::string to_string(const BiForm& f);

BiForm sample_biform(std::uint32_t p, int d, std::mt19937_64& rng);
/// Number of bihomogeneous forms of bidegree (d, d): p^((d+1)^2).
mpz_class biform_space_size(std::uint32_t p, int d);
/// Enumeration of bidegree (d, d) forms in grid-lexicographic order.
class BiFormEnumerator {
 public:
  BiFormEnumerator(std::uint32_t p, int d, std::uint64_t cap = kDefaultEnumerationCap);
  std::uint64_t size() const noexcept { return size_; }
  BiForm at(std::uint64_t index) const;

 private:
  std::uint32_t p_;
  int d_;
  std::uint64_t size_;
};

/// Partial derivatives in the order u0, u1, v0, v1.
std::vector<BiForm> partials(const BiForm& f);
/// Substitution x0 = u0 v0, x1 = u0 v1, x2 = u1 v0, x3 = u1 v1.
BiForm segre_restrict(const Form& f);

/// Point of P^n over a finite field with first nonzero coordinate 1.
struct ProjPoint {
  std::shared_ptr<const ExtensionField> field;
  std::vector<ExtensionField::Element> coords;

  static ProjPoint normalized(std::shared_ptr<const ExtensionField> field, std::vector<ExtensionField::Element> coords);
  bool operator==(const ProjPoint& o) const { return field->descriptor() == o.field->descriptor() && coords == o.coords; }
};

/// All points of P^n(F_q); throws CapExceeded when (q^(n+1)-1)/(q-1) > cap.
std::vector<ProjPoint> enumerate_projective_points(int n, std::shared_ptr<const ExtensionField> field,
                                                   std::uint64_t cap = kDefaultEnumerationCap);

ExtensionField::Element eval_form(const Form& f, const ProjPoint& pt);
ExtensionField::Element eval_form(const ExtensionField& ext, const Form& f,
                                  const std::vector<ExtensionField::Element>& coords);
/// Value at ((u0:u1), (v0:v1)).
ExtensionField::Element eval_biform(const ExtensionField& ext, const BiForm& f,
                                    const std::vector<ExtensionField::Element>& uv);

enum class Surface { P2, SegreQuadric };

struct SurfaceModel {
  Surface tag = Surface::P2;
  std::uint32_t p = 2;
};

/// "p2" or "segre"; throws std::invalid_argument otherwise.
Surface parse_surface(const std::string& name);
std::string surface_name(Surface s);

/**
 * @brief F_p-points of a surface with precomputed monomial values.
 *
 * Used to count |C(F_p)| = #{P in X(F_p) : f(P) = 0} quickly for many forms
 * of one degree.
 */
class RationalPointTable {
 public:
  RationalPointTable(const SurfaceModel& surface, int degree);

  std::size_t size() const noexcept { return points_; }
  /// Number of rational points of the surface on which the form vanishes.
  int count_zeros(const std::vector<std::uint32_t>& coeffs) const;
  /// Value of the form with the given coefficients at point i.
  std::uint32_t value_at(const std::vector<std::uint32_t>& coeffs, std::size_t i) const;
  /// Coordinates of point i: (x0, x1, x2) for P2, (u0, u1, v0, v1) for the quadric.
  const std::vector<std::uint32_t>& point(std::size_t i) const { return coords_[i]; }

 private:
  PrimeField F_;
  std::size_t points_ = 0;
  std::size_t monomials_ = 0;
  std::vector<std::vector<std::uint32_t>> coords_;
  std::vector<std::uint32_t> values_;  // points_ x monomials_
};

}  // namespace curvecount

#endif  // CURVECOUNT_FORMS_HPP
