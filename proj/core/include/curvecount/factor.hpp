#ifndef CURVECOUNT_FACTOR_HPP
#define CURVECOUNT_FACTOR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvecount/poly.hpp"
#include "curvecount/prime_field.hpp"

namespace curvecount {

using PolyFp = Poly<PrimeField::Element>;

template <class Field>
mpz_class field_order(const Field& F) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), F.characteristic(), static_cast<unsigned long>(F.degree()));
  return q;
}

/// Product of the distinct monic irreducible factors of f (f nonzero).
template <class Field>
Poly<typename Field::Element> radical(const PolyRing<Field>& R, const Poly<typename Field::Element>& f) {
  using P = Poly<typename Field::Element>;
  if (f.is_zero()) throw std::invalid_argument("radical of the zero polynomial");
  P g = R.monic(f);
  if (g.degree() <= 0) return R.one();
  const P d = R.derivative(g);
  if (d.is_zero()) return radical(R, R.pth_root(g));
  P c = R.gcd(g, d);
  const P w = R.div(g, c);  // factors of multiplicity prime to p
  for (P y = R.gcd(c, w); y.degree() > 0; y = R.gcd(c, w)) c = R.div(c, y);
  if (c.degree() <= 0) return w;
  // What remains is a p-th power coprime to w.
  return R.mul(w, radical(R, R.pth_root(c)));
}

template <class E>
struct DegreeFactor {
  int degree;
  Poly<E> product;
};

/**
 * Distinct-degree factorization of the squarefree part of f. Each entry is
 * the product of all monic irreducible factors of the stated degree.
 * Throws std::invalid_argument for the zero polynomial.
 */
template <class Field>
std::vector<DegreeFactor<typename Field::Element>> distinct_degree_factor(const PolyRing<Field>& R,
                                                                          const Poly<typename Field::Element>& f) {
  using P = Poly<typename Field::Element>;
  if (f.is_zero()) throw std::invalid_argument("distinct-degree factorization of zero");
  std::vector<DegreeFactor<typename Field::Element>> out;
  P g = radical(R, f);
  const mpz_class q = field_order(R.field());
  const P x = R.x();
  P h = x;
  for (int m = 1; 2 * m <= g.degree(); ++m) {
    h = R.powmod(h, q, g);
    P d = R.gcd(g, R.sub(h, x));
    if (d.degree() > 0) {
      g = R.div(g, d);
      h = R.rem(h, g);
      out.push_back({m, std::move(d)});
    }
  }
  if (g.degree() > 0) out.push_back({g.degree(), g});
  return out;
}

/**
 * Equal-degree splitting (Cantor-Zassenhaus) of a product of distinct monic
 * irreducibles of degree m. Characteristic 2 uses the trace map.
 */
template <class Field, class Rng>
std::vector<Poly<typename Field::Element>> split_irreducible(const PolyRing<Field>& R,
                                                             const Poly<typename Field::Element>& f, int m,
                                                             Rng& rng) {
  using P = Poly<typename Field::Element>;
  if (m < 1 || f.degree() < 1 || f.degree() % m != 0)
    throw std::invalid_argument("split_irreducible: degree inconsistent with factor degree");
  if (f.degree() == m) return {R.monic(f)};

  const auto& F = R.field();
  const mpz_class q = field_order(F);
  std::vector<P> out;
  std::vector<P> todo{R.monic(f)};
  while (!todo.empty()) {
    P g = std::move(todo.back());
    todo.pop_back();
    if (g.degree() == m) {
      out.push_back(std::move(g));
      continue;
    }
    for (;;) {
      P a = R.random(g.degree(), rng);
      if (a.degree() <= 0) continue;
      P b;
      if (F.characteristic() == 2) {
        const int steps = F.degree() * m;
        P t = R.rem(a, g);
        b = t;
        for (int i = 1; i < steps; ++i) {
          t = R.mulmod(t, t, g);
          b = R.add(b, t);
        }
      } else {
        mpz_class e;
        mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m));
        e = (e - 1) / 2;
        b = R.sub(R.powmod(a, e, g), R.one());
      }
      P d = R.gcd(g, b);
      if (d.degree() > 0 && d.degree() < g.degree()) {
        todo.push_back(R.div(g, d));
        todo.push_back(std::move(d));
        break;
      }
    }
  }
  return out;
}

/// Rabin irreducibility test.
template <class Field>
bool is_irreducible(const PolyRing<Field>& R, const Poly<typename Field::Element>& f) {
  using P = Poly<typename Field::Element>;
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const P g = R.monic(f);
  const mpz_class q = field_order(R.field());
  std::vector<int> prime_divisors;
  for (int r = 2, t = n; t > 1; ++r) {
    if (t % r == 0) {
      prime_divisors.push_back(r);
      while (t % r == 0) t /= r;
    }
  }
  const P x = R.x();
  std::vector<P> frob(static_cast<std::size_t>(n) + 1);  // frob[i] = x^{q^i} mod g
  frob[0] = R.rem(x, g);
  for (int i = 1; i <= n; ++i) frob[static_cast<std::size_t>(i)] = R.powmod(frob[static_cast<std::size_t>(i - 1)], q, g);
  if (!R.sub(frob[static_cast<std::size_t>(n)], frob[0]).is_zero()) return false;
  for (int r : prime_divisors) {
    const P d = R.gcd(g, R.sub(frob[static_cast<std::size_t>(n / r)], frob[0]));
    if (d.degree() > 0) return false;
  }
  return true;
}

/// All roots of f in the coefficient field (f nonzero).
template <class Field, class Rng>
std::vector<typename Field::Element> roots(const PolyRing<Field>& R, const Poly<typename Field::Element>& f,
                                           Rng& rng) {
  std::vector<typename Field::Element> out;
  for (auto& [deg, prod] : distinct_degree_factor(R, f)) {
    if (deg != 1) continue;
    for (auto& lin : split_irreducible(R, prod, 1, rng)) out.push_back(R.field().neg(lin.coeffs[0]));
  }
  return out;
}

/// Lexicographically smallest monic irreducible of degree k over F_p
/// (coefficients compared from x^{k-1} down to the constant). For k = 1
/// the identity polynomial x is returned. Results are cached per (p, k).
PolyFp find_irreducible(std::uint32_t p, int k);

}  // namespace curvecount

#endif  // CURVECOUNT_FACTOR_HPP
