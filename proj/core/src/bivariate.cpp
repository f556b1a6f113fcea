#include "curvecount/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace curvecount {

int BiPoly::deg_x() const noexcept {
  int d = -1;
  for (const auto& c : ycoeffs) d = std::max(d, c.degree());
  return d;
}

bool BiPoly::is_univariate_in_y() const noexcept {
  return std::all_of(ycoeffs.begin(), ycoeffs.end(), [](const PolyFp& c) { return c.degree() <= 0; });
}

void BivariateRing::normalize(BiPoly& a) const {
  for (auto& c : a.ycoeffs) R_.normalize(c);
  while (!a.ycoeffs.empty() && a.ycoeffs.back().is_zero()) a.ycoeffs.pop_back();
}

BiPoly BivariateRing::from_grid(const std::vector<std::vector<std::uint32_t>>& grid) const {
  BiPoly out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid[i].size(); ++j) {
      const auto c = grid[i][j] % field().characteristic();
      if (c == 0) continue;
      if (out.ycoeffs.size() <= j) out.ycoeffs.resize(j + 1);
      auto& col = out.ycoeffs[j].coeffs;
      if (col.size() <= i) col.resize(i + 1, 0);
      col[i] = c;
    }
  }
  normalize(out);
  return out;
}

BiPoly BivariateRing::from_x(const PolyFp& c) const {
  BiPoly out;
  if (!c.is_zero()) out.ycoeffs.push_back(c);
  return out;
}

BiPoly BivariateRing::y() const { return BiPoly{{PolyFp{}, R_.one()}}; }

BiPoly BivariateRing::add(const BiPoly& a, const BiPoly& b) const {
  BiPoly r;
  r.ycoeffs.resize(std::max(a.ycoeffs.size(), b.ycoeffs.size()));
  for (std::size_t j = 0; j < r.ycoeffs.size(); ++j) {
    const PolyFp& ca = j < a.ycoeffs.size() ? a.ycoeffs[j] : PolyFp{};
    const PolyFp& cb = j < b.ycoeffs.size() ? b.ycoeffs[j] : PolyFp{};
    r.ycoeffs[j] = R_.add(ca, cb);
  }
  normalize(r);
  return r;
}

BiPoly BivariateRing::sub(const BiPoly& a, const BiPoly& b) const {
  BiPoly r;
  r.ycoeffs.resize(std::max(a.ycoeffs.size(), b.ycoeffs.size()));
  for (std::size_t j = 0; j < r.ycoeffs.size(); ++j) {
    const PolyFp& ca = j < a.ycoeffs.size() ? a.ycoeffs[j] : PolyFp{};
    const PolyFp& cb = j < b.ycoeffs.size() ? b.ycoeffs[j] : PolyFp{};
    r.ycoeffs[j] = R_.sub(ca, cb);
  }
  normalize(r);
  return r;
}

BiPoly BivariateRing::mul(const BiPoly& a, const BiPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  BiPoly r;
  r.ycoeffs.resize(a.ycoeffs.size() + b.ycoeffs.size() - 1);
  for (std::size_t i = 0; i < a.ycoeffs.size(); ++i) {
    if (a.ycoeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.ycoeffs.size(); ++j)
      r.ycoeffs[i + j] = R_.add(r.ycoeffs[i + j], R_.mul(a.ycoeffs[i], b.ycoeffs[j]));
  }
  normalize(r);
  return r;
}

BiPoly BivariateRing::scale(const BiPoly& a, const PolyFp& c) const {
  BiPoly r = a;
  for (auto& t : r.ycoeffs) t = R_.mul(t, c);
  normalize(r);
  return r;
}

BiPoly BivariateRing::prem(const BiPoly& a, const BiPoly& b) const {
  if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
  const int db = b.deg_y();
  if (a.deg_y() < db) return a;
  int e = a.deg_y() - db + 1;
  const PolyFp& lb = b.ycoeffs.back();
  BiPoly r = a;
  while (!r.is_zero() && r.deg_y() >= db) {
    const int shift = r.deg_y() - db;
    const PolyFp lr = r.ycoeffs.back();
    // r <- lb * r - lr * y^shift * b; the top coefficient cancels.
    for (auto& c : r.ycoeffs) c = R_.mul(c, lb);
    for (int j = 0; j <= db; ++j) {
      auto& t = r.ycoeffs[static_cast<std::size_t>(j + shift)];
      t = R_.sub(t, R_.mul(lr, b.ycoeffs[static_cast<std::size_t>(j)]));
    }
    normalize(r);
    --e;
  }
  if (e > 0 && !r.is_zero()) {
    const PolyFp f = R_.pow(lb, static_cast<unsigned>(e));
    for (auto& c : r.ycoeffs) c = R_.mul(c, f);
  }
  return r;
}

BiPoly BivariateRing::exact_div(const BiPoly& a, const BiPoly& b) const {
  if (b.is_zero()) throw std::domain_error("bivariate division by zero");
  BiPoly q;
  BiPoly r = a;
  const int db = b.deg_y();
  const PolyFp& lb = b.ycoeffs.back();
  while (!r.is_zero()) {
    if (r.deg_y() < db) throw std::domain_error("bivariate division is not exact");
    auto [c, rest] = R_.divrem(r.ycoeffs.back(), lb);
    if (!rest.is_zero()) throw std::domain_error("bivariate division is not exact");
    const auto shift = static_cast<std::size_t>(r.deg_y() - db);
    if (q.ycoeffs.size() <= shift) q.ycoeffs.resize(shift + 1);
    q.ycoeffs[shift] = c;
    for (int j = 0; j <= db; ++j) {
      auto& t = r.ycoeffs[shift + static_cast<std::size_t>(j)];
      t = R_.sub(t, R_.mul(c, b.ycoeffs[static_cast<std::size_t>(j)]));
    }
    normalize(r);
  }
  normalize(q);
  return q;
}

PolyFp BivariateRing::content(const BiPoly& a) const {
  PolyFp g;
  for (const auto& c : a.ycoeffs) {
    g = R_.gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BivariateRing::primitive_part(const BiPoly& a) const {
  if (a.is_zero()) return a;
  const PolyFp c = content(a);
  BiPoly r = a;
  for (auto& t : r.ycoeffs) t = R_.div(t, c);
  return r;
}

BiPoly BivariateRing::gcd(const BiPoly& a0, const BiPoly& b0) const {
  auto normalized = [&](BiPoly g) {
    if (g.is_zero()) return g;
    const auto inv = field().inv(R_.leading(g.ycoeffs.back()));
    for (auto& t : g.ycoeffs) t = R_.scale(t, inv);
    return g;
  };
  if (a0.is_zero()) return normalized(b0);
  if (b0.is_zero()) return normalized(a0);
  const PolyFp ca = content(a0);
  const PolyFp cb = content(b0);
  const PolyFp c = R_.gcd(ca, cb);
  BiPoly a = primitive_part(a0);
  BiPoly b = primitive_part(b0);
  if (a.deg_y() < b.deg_y()) std::swap(a, b);
  BiPoly g;
  if (b.deg_y() == 0) {
    g = from_x(R_.one());
  } else {
    for (;;) {
      BiPoly r = prem(a, b);
      if (r.is_zero()) {
        g = std::move(b);
        break;
      }
      if (r.deg_y() == 0) {
        g = from_x(R_.one());
        break;
      }
      a = std::move(b);
      b = primitive_part(r);
    }
  }
  return normalized(scale(g, c));
}

PolyFp BivariateRing::resultant_y(const BiPoly& a0, const BiPoly& b0) const {
  if (a0.is_zero() || b0.is_zero()) return {};
  if (a0.deg_y() < 1 || b0.deg_y() < 1) throw std::invalid_argument("resultant_y needs positive y-degree");
  const auto& F = field();
  BiPoly a = a0;
  BiPoly b = b0;
  PrimeField::Element sign = F.one();
  if (a.deg_y() < b.deg_y()) {
    std::swap(a, b);
    if ((a.deg_y() % 2 == 1) && (b.deg_y() % 2 == 1)) sign = F.neg(sign);
  }
  PolyFp g = R_.one();
  PolyFp h = R_.one();
  for (;;) {
    const int delta = a.deg_y() - b.deg_y();
    if ((a.deg_y() % 2 == 1) && (b.deg_y() % 2 == 1)) sign = F.neg(sign);
    BiPoly r = prem(a, b);
    a = std::move(b);
    const PolyFp divisor = R_.mul(g, R_.pow(h, static_cast<unsigned>(delta)));
    for (auto& t : r.ycoeffs) t = R_.div(t, divisor);
    b = std::move(r);
    g = a.ycoeffs.back();
    if (delta > 0) h = R_.div(R_.pow(g, static_cast<unsigned>(delta)), R_.pow(h, static_cast<unsigned>(delta - 1)));
    if (b.deg_y() <= 0) break;
  }
  if (b.is_zero()) return {};
  const int da = a.deg_y();
  PolyFp res = R_.pow(b.ycoeffs[0], static_cast<unsigned>(da));
  if (da >= 1) res = R_.div(res, R_.pow(h, static_cast<unsigned>(da - 1)));
  return R_.scale(res, sign);
}

PrimeField::Element BivariateRing::evaluate(const BiPoly& a, PrimeField::Element x, PrimeField::Element y) const {
  const auto& F = field();
  PrimeField::Element acc = F.zero();
  for (auto it = a.ycoeffs.rbegin(); it != a.ycoeffs.rend(); ++it) acc = F.add(F.mul(acc, y), R_.eval(*it, x));
  return acc;
}

ExtensionField::Element BivariateRing::evaluate(const ExtensionField& ext, const BiPoly& a,
                                                const ExtensionField::Element& x,
                                                const ExtensionField::Element& y) const {
  PolyRing<ExtensionField> E(ext);
  return E.eval(specialize_x(ext, a, x), y);
}

Poly<ExtensionField::Element> BivariateRing::specialize_x(const ExtensionField& ext, const BiPoly& a,
                                                          const ExtensionField::Element& x0) const {
  PolyRing<ExtensionField> E(ext);
  std::vector<ExtensionField::Element> out;
  out.reserve(a.ycoeffs.size());
  for (const auto& c : a.ycoeffs) {
    ExtensionField::Element acc = ext.zero();
    for (auto it = c.coeffs.rbegin(); it != c.coeffs.rend(); ++it) acc = ext.add(ext.mul(acc, x0), ext.embed(*it));
    out.push_back(std::move(acc));
  }
  return E.make(std::move(out));
}

}  // namespace curvecount
