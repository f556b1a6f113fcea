#include "curvecount/smoothness.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "curvecount/factor.hpp"
#include "table_field.hpp"

namespace curvecount {

std::string to_string(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Smooth:
      return "Smooth";
    case VerdictTag::Singular:
      return "Singular";
    case VerdictTag::NotACurve:
      return "NotACurve";
  }
  return "?";
}

std::string to_string(NotACurveReason reason) {
  return reason == NotACurveReason::ZeroForm ? "ZeroForm" : "VanishesOnSurface";
}

namespace {

constexpr int kMaxSplitDepth = 64;

std::uint64_t coefficient_hash(const std::vector<std::uint32_t>& c) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto v : c) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

bool is_nonconstant(const BiPoly& g) { return g.deg_y() > 0 || g.deg_x() > 0; }

BiPoly restrict_to_line(const BiPoly& g) {
  BiPoly r;
  if (!g.is_zero() && !g.ycoeffs[0].is_zero()) r.ycoeffs.push_back(g.ycoeffs[0]);
  return r;
}

BiPoly restrict_to_point(const BiPoly& g) {
  BiPoly r;
  if (!g.is_zero() && !g.ycoeffs[0].is_zero() && g.ycoeffs[0].coeffs[0] != 0)
    r.ycoeffs.push_back(PolyFp({g.ycoeffs[0].coeffs[0]}));
  return r;
}

FieldDescriptor prime_descriptor(std::uint32_t p) { return FieldDescriptor{p, 1, {0, 1}}; }

class Eliminator {
 public:
  Eliminator(const PrimeField& field, std::uint64_t seed) : B_(field), rng_(seed) {}

  CommonZeroResult decide(std::vector<BiPoly> polys, int depth) {
    if (depth > kMaxSplitDepth) throw EliminationDegenerate("elimination split budget exhausted");
    const auto& F = B_.field();
    std::erase_if(polys, [](const BiPoly& g) { return g.is_zero(); });
    if (polys.empty()) {
      const auto desc = prime_descriptor(F.characteristic());
      return {true, AffineWitness{desc, {0}, {0}}};
    }
    for (const auto& g : polys)
      if (g.is_nonzero_constant()) return {false, std::nullopt};

    BiPoly G = polys.front();
    for (std::size_t i = 1; i < polys.size() && is_nonconstant(G); ++i) G = B_.gcd(G, polys[i]);
    if (is_nonconstant(G)) return {true, curve_witness(G)};

    const bool all_in_x = std::all_of(polys.begin(), polys.end(), [](const BiPoly& g) { return g.deg_y() == 0; });
    const bool all_in_y = std::all_of(polys.begin(), polys.end(), [](const BiPoly& g) { return g.is_univariate_in_y(); });
    if (all_in_x || all_in_y) return {false, std::nullopt};

    std::size_t pivot = polys.size();
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (polys[i].deg_y() < 1) continue;
      if (pivot == polys.size() || polys[i].deg_y() < polys[pivot].deg_y()) pivot = i;
    }
    const BiPoly& g1 = polys[pivot];
    const auto& Rx = B_.x_ring();
    PolyFp locus;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i == pivot) continue;
      const BiPoly& g = polys[i];
      PolyFp r;
      if (g.deg_y() == 0) {
        r = g.ycoeffs[0];
      } else {
        r = B_.resultant_y(g1, g);
        if (r.is_zero()) {
          // g1 = h a, g = h b: V(g1, g) = V(h) u V(a, b).
          const BiPoly h = B_.gcd(g1, g);
          std::vector<BiPoly> rest;
          for (std::size_t j = 0; j < polys.size(); ++j)
            if (j != pivot && j != i) rest.push_back(polys[j]);
          std::vector<BiPoly> with_h = rest;
          with_h.push_back(h);
          auto first = decide(std::move(with_h), depth + 1);
          if (first.common_zero) return first;
          rest.push_back(B_.exact_div(g1, h));
          rest.push_back(B_.exact_div(g, h));
          return decide(std::move(rest), depth + 1);
        }
      }
      locus = Rx.gcd(locus, r);
      if (locus.degree() == 0) return {false, std::nullopt};
    }
    return check_fibers(locus, polys);
  }

 private:
  CommonZeroResult check_fibers(const PolyFp& locus, const std::vector<BiPoly>& polys) {
    const auto& F = B_.field();
    const auto& Rx = B_.x_ring();
    for (const auto& [m, product] : distinct_degree_factor(Rx, locus)) {
      for (const auto& h : split_irreducible(Rx, product, m, rng_)) {
        // F_p[t]/(h); the root of h is the class of t.
        const ExtensionField ext(FieldDescriptor{F.characteristic(), m, h.coeffs}, false);
        const PolyRing<ExtensionField> E(ext);
        Poly<ExtensionField::Element> fiber_gcd;
        for (const auto& g : polys) {
          std::vector<ExtensionField::Element> c;
          c.reserve(g.ycoeffs.size());
          for (const auto& coeff : g.ycoeffs) c.push_back(ext.reduce(coeff));
          auto s = E.make(std::move(c));
          if (s.is_zero()) continue;
          fiber_gcd = E.gcd(fiber_gcd, s);
          if (fiber_gcd.degree() == 0) break;
        }
        if (fiber_gcd.degree() == 0) continue;
        const auto alpha = ext.generator();
        if (fiber_gcd.is_zero()) return {true, AffineWitness{ext.descriptor(), alpha, ext.zero()}};
        auto ys = roots(E, fiber_gcd, rng_);
        if (ys.empty()) return {true, std::nullopt};
        return {true, AffineWitness{ext.descriptor(), alpha, ys.front()}};
      }
    }
    return {false, std::nullopt};
  }

  /// Some point on the curve g = 0, when one is easy to name.
  std::optional<AffineWitness> curve_witness(const BiPoly& g) {
    const auto& F = B_.field();
    const auto& Rx = B_.x_ring();
    const std::uint32_t p = F.characteristic();
    auto root_field_of = [&](const PolyFp& u) {
      auto ddf = distinct_degree_factor(Rx, u);
      const auto& [m, product] = ddf.front();
      auto factors = split_irreducible(Rx, product, m, rng_);
      return ExtensionField(FieldDescriptor{p, m, factors.front().coeffs}, false);
    };
    if (g.deg_y() == 0) {
      const auto ext = root_field_of(g.ycoeffs[0]);
      return AffineWitness{ext.descriptor(), ext.generator(), ext.zero()};
    }
    for (std::uint32_t x0 = 0; x0 < std::min<std::uint32_t>(p, 64); ++x0) {
      std::vector<std::uint32_t> c;
      for (const auto& coeff : g.ycoeffs) c.push_back(Rx.eval(coeff, x0));
      const PolyFp u = Rx.make(std::move(c));
      if (u.degree() < 1) continue;
      const auto ext = root_field_of(u);
      return AffineWitness{ext.descriptor(), ext.embed(x0), ext.generator()};
    }
    return std::nullopt;
  }

  BivariateRing B_;
  std::mt19937_64 rng_;
};

Witness to_witness(Surface surface, int chart, const AffineWitness& aw) {
  const ExtensionField ext(aw.field, false);
  Witness w{chart, aw.field, {}};
  for (auto& c : stratum_point(ext, surface, chart, aw.x, aw.y)) w.coords.push_back(std::move(c));
  return w;
}

/// Rational points of each stratum where the whole system vanishes.
std::optional<Witness> rational_singular_point(const PrimeField& F, Surface surface,
                                               const std::vector<ChartSystem>& systems) {
  const BivariateRing B(F);
  const std::uint32_t p = F.characteristic();
  for (const auto& sys : systems) {
    const std::uint32_t xs = sys.dim >= 1 ? p : 1;
    const std::uint32_t ys = sys.dim == 2 ? p : 1;
    for (std::uint32_t x = 0; x < xs; ++x) {
      for (std::uint32_t y = 0; y < ys; ++y) {
        const bool all_zero = std::all_of(sys.polys.begin(), sys.polys.end(),
                                          [&](const BiPoly& g) { return B.evaluate(g, x, y) == 0; });
        if (all_zero) return to_witness(surface, sys.chart, AffineWitness{prime_descriptor(p), {x}, {y}});
      }
    }
  }
  return std::nullopt;
}

Verdict decide_systems(const SurfaceModel& surface, const std::vector<ChartSystem>& systems, std::uint64_t seed) {
  const PrimeField F(surface.p);
  if (auto w = rational_singular_point(F, surface.tag, systems)) return Verdict{VerdictTag::Singular, std::move(w), {}};
  for (const auto& sys : systems) {
    auto res = decide_common_zero(F, sys, seed);
    if (!res.common_zero) continue;
    Verdict v{VerdictTag::Singular, std::nullopt, std::nullopt};
    if (res.witness) v.witness = to_witness(surface.tag, sys.chart, *res.witness);
    return v;
  }
  return Verdict{VerdictTag::Smooth, std::nullopt, std::nullopt};
}

}  // namespace

std::vector<ChartSystem> chart_systems(const Form& f) {
  if (f.n_vars() != 3) throw std::invalid_argument("plane chart systems need a form in three variables");
  std::vector<Form> forms{f};
  for (auto& d : partials(f)) forms.push_back(std::move(d));
  ChartSystem plane{2, 2, {}}, line{1, 1, {}}, point{0, 0, {}};
  for (const auto& g : forms) {
    plane.polys.push_back(dehomogenize(g, 2));
    line.polys.push_back(restrict_to_line(dehomogenize(g, 1)));
    point.polys.push_back(restrict_to_point(dehomogenize(g, 0)));
  }
  return {plane, line, point};
}

std::vector<ChartSystem> chart_systems(const BiForm& f) {
  std::vector<BiForm> forms{f};
  for (auto& d : partials(f)) forms.push_back(std::move(d));
  const BivariateRing B{PrimeField(f.p())};
  ChartSystem c0{0, 2, {}}, c1{1, 1, {}}, c2{2, 1, {}}, c3{3, 0, {}};
  for (const auto& g : forms) {
    const int du = g.deg_u();
    const int dv = g.deg_v();
    std::vector<std::vector<std::uint32_t>> plane(static_cast<std::size_t>(du + 1),
                                                  std::vector<std::uint32_t>(static_cast<std::size_t>(dv + 1)));
    std::vector<std::vector<std::uint32_t>> in_u(static_cast<std::size_t>(du + 1), std::vector<std::uint32_t>(1));
    std::vector<std::vector<std::uint32_t>> in_v(static_cast<std::size_t>(dv + 1), std::vector<std::uint32_t>(1));
    for (int i = 0; i <= du; ++i)
      for (int j = 0; j <= dv; ++j) plane[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.coeff(i, j);
    for (int i = 0; i <= du; ++i) in_u[static_cast<std::size_t>(i)][0] = g.coeff(i, dv);
    for (int j = 0; j <= dv; ++j) in_v[static_cast<std::size_t>(j)][0] = g.coeff(du, j);
    c0.polys.push_back(B.from_grid(plane));
    c1.polys.push_back(B.from_grid(in_u));
    c2.polys.push_back(B.from_grid(in_v));
    c3.polys.push_back(B.from_grid({{g.coeff(du, dv)}}));
  }
  return {c0, c1, c2, c3};
}

std::vector<ExtensionField::Element> stratum_point(const ExtensionField& ext, Surface surface, int chart,
                                                   const ExtensionField::Element& x,
                                                   const ExtensionField::Element& y) {
  const auto zero = ext.zero();
  const auto one = ext.one();
  if (surface == Surface::P2) {
    switch (chart) {
      case 2:
        return {x, y, one};
      case 1:
        return {x, one, zero};
      case 0:
        return {one, zero, zero};
      default:
        break;
    }
  } else {
    switch (chart) {
      case 0:
        return {one, x, one, y};
      case 1:
        return {one, x, zero, one};
      case 2:
        return {zero, one, one, x};
      case 3:
        return {zero, one, zero, one};
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown stratum");
}

CommonZeroResult decide_common_zero(const PrimeField& field, const ChartSystem& system, std::uint64_t seed) {
  Eliminator elim(field, seed);
  return elim.decide(system.polys, 0);
}

Verdict is_smooth(const SurfaceModel& surface, const Form& f) {
  if (f.p() != surface.p) throw std::invalid_argument("form and surface over different fields");
  if (surface.tag == Surface::SegreQuadric) {
    if (f.n_vars() != 4) throw std::invalid_argument("quadric sections need a form on P^3");
    if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
    const BiForm r = segre_restrict(f);
    if (r.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::VanishesOnSurface};
    return is_smooth(surface, r);
  }
  if (f.n_vars() != 3) throw std::invalid_argument("plane sections need a form in three variables");
  if (f.degree() < 1) throw std::invalid_argument("smoothness needs degree >= 1");
  if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
  return decide_systems(surface, chart_systems(f), coefficient_hash(f.coeffs()));
}

Verdict is_smooth(const SurfaceModel& surface, const BiForm& f) {
  if (surface.tag != Surface::SegreQuadric) throw std::invalid_argument("bihomogeneous forms live on the quadric");
  if (f.p() != surface.p) throw std::invalid_argument("form and surface over different fields");
  if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
  return decide_systems(surface, chart_systems(f), coefficient_hash(f.grid()));
}

int oracle_completeness_bound(Surface surface, int degree) {
  if (surface == Surface::P2) return std::max(1, (degree - 1) * (degree - 1));
  return std::max(1, degree * degree);
}

namespace {

using detail::TableField;

std::uint64_t scan_cost(std::uint32_t p, int m_max, std::uint64_t cap) {
  std::uint64_t total = 0;
  for (int m = 1; m <= m_max; ++m) {
    std::uint64_t q = 1;
    for (int i = 0; i < m; ++i) {
      q *= p;
      if (q > (std::uint64_t{1} << 24U)) throw CapExceeded("oracle field F_" + std::to_string(p) + "^" + std::to_string(m) + " is too large to scan");
    }
    total += (q + 1) * (q + 1);
    if (total > cap) throw CapExceeded("oracle scan of " + std::to_string(total) + "+ points exceeds the cap of " + std::to_string(cap));
  }
  return total;
}

}  // namespace

std::uint64_t oracle_scan_points(std::uint32_t p, int m_max, std::uint64_t cap) { return scan_cost(p, m_max, cap); }

namespace {

Witness table_witness(const TableField& T, int chart, const std::vector<std::uint32_t>& coords) {
  Witness w{chart, FieldDescriptor{T.p(), T.degree(), T.modulus()}, {}};
  for (auto c : coords) w.coords.push_back(T.digits(c));
  return w;
}

/// Horner evaluation of sum_i c[i] t^i.
std::uint32_t horner(const TableField& T, const std::vector<std::uint32_t>& c, std::uint32_t t) {
  std::uint32_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = T.add(T.mul(acc, t), *it);
  return acc;
}

/// grid[i][j]: coefficient of s^i t^j; returns per-t coefficient vectors in s.
struct DenseBivariate {
  std::vector<std::vector<std::uint32_t>> grid;

  std::vector<std::uint32_t> at_t(const TableField& T, std::uint32_t t) const {
    std::vector<std::uint32_t> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = horner(T, grid[i], t);
    return out;
  }
};

/**
 * Scans the affine plane (s, t), the line (s) and the point of one surface
 * model. plane/line/point hold, per system polynomial, the dense
 * restriction to each stratum.
 */
std::optional<Witness> scan_strata(const TableField& T, Surface surface, const std::vector<DenseBivariate>& plane,
                                   const std::vector<std::vector<std::uint32_t>>& line,
                                   const std::vector<std::vector<std::uint32_t>>& line2,
                                   const std::vector<std::uint32_t>& point, int plane_chart,
                                   const std::vector<int>& line_charts, int point_chart) {
  const std::uint32_t q = T.order();
  std::vector<std::vector<std::uint32_t>> cs(plane.size());
  for (std::uint32_t t = 0; t < q; ++t) {
    for (std::size_t g = 0; g < plane.size(); ++g) cs[g] = plane[g].at_t(T, t);
    for (std::uint32_t s = 0; s < q; ++s) {
      bool all_zero = true;
      for (const auto& c : cs) {
        if (horner(T, c, s) != 0) {
          all_zero = false;
          break;
        }
      }
      if (!all_zero) continue;
      if (surface == Surface::P2) return table_witness(T, plane_chart, {s, t, 1});
      return table_witness(T, plane_chart, {1, s, 1, t});
    }
  }
  const std::vector<const std::vector<std::vector<std::uint32_t>>*> lines{&line, &line2};
  for (std::size_t L = 0; L < line_charts.size(); ++L) {
    const auto& polys = *lines[L];
    for (std::uint32_t s = 0; s < q; ++s) {
      const bool all_zero =
          std::all_of(polys.begin(), polys.end(), [&](const std::vector<std::uint32_t>& c) { return horner(T, c, s) == 0; });
      if (!all_zero) continue;
      if (surface == Surface::P2) return table_witness(T, line_charts[L], {s, 1, 0});
      if (L == 0) return table_witness(T, line_charts[L], {1, s, 0, 1});
      return table_witness(T, line_charts[L], {0, 1, 1, s});
    }
  }
  if (std::all_of(point.begin(), point.end(), [](std::uint32_t c) { return c == 0; })) {
    if (surface == Surface::P2) return table_witness(T, point_chart, {1, 0, 0});
    return table_witness(T, point_chart, {0, 1, 0, 1});
  }
  return std::nullopt;
}

}  // namespace

Verdict brute_force_singular(const SurfaceModel& surface, const Form& f, int m_max, std::uint64_t point_cap) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  if (surface.tag == Surface::SegreQuadric) {
    if (f.n_vars() != 4) throw std::invalid_argument("quadric sections need a form on P^3");
    if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
    const BiForm r = segre_restrict(f);
    if (r.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::VanishesOnSurface};
    return brute_force_singular(surface, r, m_max, point_cap);
  }
  if (f.n_vars() != 3) throw std::invalid_argument("plane sections need a form in three variables");
  if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
  scan_cost(surface.p, m_max, point_cap);

  std::vector<Form> forms{f};
  for (auto& d : partials(f)) forms.push_back(std::move(d));
  for (int m = 1; m <= m_max; ++m) {
    const auto T = detail::table_field(surface.p, m);
    std::vector<DenseBivariate> plane;
    std::vector<std::vector<std::uint32_t>> line;
    std::vector<std::uint32_t> point;
    for (const auto& g : forms) {
      const auto deg = static_cast<std::size_t>(g.degree());
      DenseBivariate db{std::vector<std::vector<std::uint32_t>>(deg + 1, std::vector<std::uint32_t>(deg + 1, 0))};
      std::vector<std::uint32_t> l(deg + 1, 0);
      std::uint32_t pt = 0;
      for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
        const auto& e = g.basis()[k];
        const auto c = g.coeffs()[k];
        db.grid[e[0]][e[1]] = c;
        if (e[2] == 0) l[e[0]] = c;
        if (e[0] == deg) pt = c;
      }
      plane.push_back(std::move(db));
      line.push_back(std::move(l));
      point.push_back(pt);
    }
    if (auto w = scan_strata(*T, Surface::P2, plane, line, {}, point, 2, {1}, 0))
      return Verdict{VerdictTag::Singular, std::move(w), std::nullopt};
  }
  return Verdict{VerdictTag::Smooth, std::nullopt, std::nullopt};
}

Verdict brute_force_singular(const SurfaceModel& surface, const BiForm& f, int m_max, std::uint64_t point_cap) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
  if (surface.tag != Surface::SegreQuadric) throw std::invalid_argument("bihomogeneous forms live on the quadric");
  if (f.is_zero()) return Verdict{VerdictTag::NotACurve, std::nullopt, NotACurveReason::ZeroForm};
  scan_cost(surface.p, m_max, point_cap);

  std::vector<BiForm> forms{f};
  for (auto& d : partials(f)) forms.push_back(std::move(d));
  for (int m = 1; m <= m_max; ++m) {
    const auto T = detail::table_field(surface.p, m);
    std::vector<DenseBivariate> plane;
    std::vector<std::vector<std::uint32_t>> in_u, in_v;
    std::vector<std::uint32_t> point;
    for (const auto& g : forms) {
      const int du = g.deg_u();
      const int dv = g.deg_v();
      DenseBivariate db;
      std::vector<std::uint32_t> lu, lv;
      for (int i = 0; i <= du; ++i) {
        db.grid.emplace_back();
        for (int j = 0; j <= dv; ++j) db.grid.back().push_back(g.coeff(i, j));
        lu.push_back(g.coeff(i, dv));
      }
      for (int j = 0; j <= dv; ++j) lv.push_back(g.coeff(du, j));
      plane.push_back(std::move(db));
      in_u.push_back(std::move(lu));
      in_v.push_back(std::move(lv));
      point.push_back(g.coeff(du, dv));
    }
    if (auto w = scan_strata(*T, Surface::SegreQuadric, plane, in_u, in_v, point, 0, {1, 2}, 3))
      return Verdict{VerdictTag::Singular, std::move(w), std::nullopt};
  }
  return Verdict{VerdictTag::Smooth, std::nullopt, std::nullopt};
}

bool verify_witness(const SurfaceModel& surface, const Form& f, const Witness& w) {
  if (surface.tag == Surface::SegreQuadric) return verify_witness(surface, segre_restrict(f), w);
  const ExtensionField ext(w.field, false);
  std::vector<ExtensionField::Element> pt(w.coords.begin(), w.coords.end());
  if (std::all_of(pt.begin(), pt.end(), [&](const auto& c) { return ext.is_zero(c); })) return false;
  if (!ext.is_zero(eval_form(ext, f, pt))) return false;
  for (const auto& d : partials(f))
    if (!ext.is_zero(eval_form(ext, d, pt))) return false;
  return true;
}

bool verify_witness(const SurfaceModel& surface, const BiForm& f, const Witness& w) {
  if (surface.tag != Surface::SegreQuadric) throw std::invalid_argument("bihomogeneous forms live on the quadric");
  const ExtensionField ext(w.field, false);
  std::vector<ExtensionField::Element> pt(w.coords.begin(), w.coords.end());
  if (ext.is_zero(pt[0]) && ext.is_zero(pt[1])) return false;
  if (ext.is_zero(pt[2]) && ext.is_zero(pt[3])) return false;
  if (!ext.is_zero(eval_biform(ext, f, pt))) return false;
  for (const auto& d : partials(f))
    if (!ext.is_zero(eval_biform(ext, d, pt))) return false;
  return true;
}

}  // namespace curvecount
