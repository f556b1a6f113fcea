#ifndef CURVECOUNT_SMOOTHNESS_HPP
#define CURVECOUNT_SMOOTHNESS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvecount/bivariate.hpp"
#include "curvecount/extension_field.hpp"
#include "curvecount/forms.hpp"

namespace curvecount {

/// The elimination could not reach a decision within its recursion budget.
class EliminationDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class VerdictTag { Smooth, Singular, NotACurve };
enum class NotACurveReason { ZeroForm, VanishesOnSurface };

std::string to_string(VerdictTag tag);
std::string to_string(NotACurveReason reason);

/// A singular point over F_{p^m}, in homogeneous coordinates of the surface
/// ((x0, x1, x2) for P2, (u0, u1, v0, v1) for the quadric).
struct Witness {
  int chart = 0;
  FieldDescriptor field;
  std::vector<std::vector<std::uint32_t>> coords;
};

struct Verdict {
  VerdictTag tag = VerdictTag::Smooth;
  std::optional<Witness> witness;
  std::optional<NotACurveReason> reason;

  bool is_smooth() const noexcept { return tag == VerdictTag::Smooth; }
};

/**
 * @brief Polynomials whose common affine zeros are the singular points of
 * the curve inside one stratum of the surface.
 *
 * P2 strata: chart 2 is {x2 = 1} (x = x0, y = x1); chart 1 is the line
 * {x2 = 0, x1 = 1} (x = x0); chart 0 is the point (1:0:0).
 * Quadric strata: chart 0 is {u0 = v0 = 1} (x = u1, y = v1); chart 1 is
 * {u0 = 1, v = (0:1)} (x = u1); chart 2 is {u = (0:1), v0 = 1} (x = v1);
 * chart 3 is the point ((0:1), (0:1)).
 * Together the strata partition the surface.
 */
struct ChartSystem {
  int chart = 0;
  /// 2 for a plane chart, 1 for a line (polynomials in x only), 0 for a point.
  int dim = 2;
  std::vector<BiPoly> polys;
};

std::vector<ChartSystem> chart_systems(const Form& plane_form);
std::vector<ChartSystem> chart_systems(const BiForm& f);

/// Homogeneous coordinates of the affine point (x, y) of a stratum.
std::vector<ExtensionField::Element> stratum_point(const ExtensionField& ext, Surface surface, int chart,
                                                   const ExtensionField::Element& x,
                                                   const ExtensionField::Element& y);

struct AffineWitness {
  FieldDescriptor field;
  ExtensionField::Element x;
  ExtensionField::Element y;
};

struct CommonZeroResult {
  bool common_zero = false;
  std::optional<AffineWitness> witness;
};

/**
 * Decides whether the system has a common zero over the algebraic closure
 * of F_p. Positive-dimensional components are found by the system gcd;
 * the remaining finite locus is projected to x with resultants and each
 * irreducible candidate factor is checked exactly on its fiber. The seed
 * drives equal-degree splitting only and never changes the answer.
 */
CommonZeroResult decide_common_zero(const PrimeField& field, const ChartSystem& system, std::uint64_t seed = 0);

/// Exact smoothness verdict for a plane curve (n_vars = 3) or, for the
/// quadric, a form on P^3 (n_vars = 4) restricted to the surface.
Verdict is_smooth(const SurfaceModel& surface, const Form& f);
Verdict is_smooth(const SurfaceModel& surface, const BiForm& f);

/// Scan limit for brute_force_singular: (d-1)^2 for P2, d^2 for the quadric.
int oracle_completeness_bound(Surface surface, int degree);

/**
 * Oracle: checks every point of the surface over F_{p^m}, m <= m_max, for a
 * singularity of the curve. Agrees with is_smooth once m_max reaches
 * oracle_completeness_bound; below it a Smooth answer only means no
 * singular point of small degree exists. Throws CapExceeded when the scan
 * would visit more than point_cap points.
 */
Verdict brute_force_singular(const SurfaceModel& surface, const Form& f, int m_max,
                             std::uint64_t point_cap = std::uint64_t{1} << 26U);
Verdict brute_force_singular(const SurfaceModel& surface, const BiForm& f, int m_max,
                             std::uint64_t point_cap = std::uint64_t{1} << 26U);

/// Points a complete oracle scan over F_{p^m}, m <= m_max, visits; throws
/// CapExceeded above cap.
std::uint64_t oracle_scan_points(std::uint32_t p, int m_max, std::uint64_t cap);

/// True when the curve and all partials vanish at the witness.
bool verify_witness(const SurfaceModel& surface, const Form& f, const Witness& w);
bool verify_witness(const SurfaceModel& surface, const BiForm& f, const Witness& w);

}  // namespace curvecount

#endif  // CURVECOUNT_SMOOTHNESS_HPP
