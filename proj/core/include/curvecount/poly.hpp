#ifndef CURVECOUNT_POLY_HPP
#define CURVECOUNT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace curvecount {

/// Dense univariate polynomial, lowest coefficient first. A normalized
/// polynomial has no trailing zero coefficients; the zero polynomial is the
/// empty vector and has degree -1 (standing in for minus infinity).
template <class E>
struct Poly {
  std::vector<E> coeffs;

  Poly() = default;
  explicit Poly(std::vector<E> c) : coeffs(std::move(c)) {}

  bool is_zero() const noexcept { return coeffs.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/**
 * @brief Arithmetic on Poly<Field::Element> over a fixed coefficient field.
 *
 * The ring holds a copy of the field context; polynomials are plain values.
 * Every result is normalized.
 */
template <class Field>
class PolyRing {
 public:
  using Element = typename Field::Element;
  using P = Poly<Element>;

  explicit PolyRing(Field field) : F_(std::move(field)) {}

  const Field& field() const noexcept { return F_; }

  void normalize(P& a) const {
    while (!a.coeffs.empty() && F_.is_zero(a.coeffs.back())) a.coeffs.pop_back();
  }
  P make(std::vector<Element> c) const {
    P a(std::move(c));
    normalize(a);
    return a;
  }

  P zero() const { return P{}; }
  P one() const { return constant(F_.one()); }
  P constant(const Element& c) const { return make({c}); }
  /// c * x^n
  P monomial(const Element& c, int n) const {
    std::vector<Element> v(static_cast<std::size_t>(n) + 1, F_.zero());
    v.back() = c;
    return make(std::move(v));
  }
  P x() const { return monomial(F_.one(), 1); }

  Element leading(const P& a) const { return a.is_zero() ? F_.zero() : a.coeffs.back(); }
  Element coeff(const P& a, int i) const {
    return (i >= 0 && i <= a.degree()) ? a.coeffs[static_cast<std::size_t>(i)] : F_.zero();
  }
  bool is_one(const P& a) const { return a.degree() == 0 && F_.is_one(a.coeffs[0]); }

  P add(const P& a, const P& b) const {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    std::vector<Element> r(n, F_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r[i] = F_.add(r[i], b.coeffs[i]);
    return make(std::move(r));
  }
  P sub(const P& a, const P& b) const {
    const std::size_t n = std::max(a.coeffs.size(), b.coeffs.size());
    std::vector<Element> r(n, F_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r[i] = a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r[i] = F_.sub(r[i], b.coeffs[i]);
    return make(std::move(r));
  }
  P neg(const P& a) const {
    P r = a;
    for (auto& c : r.coeffs) c = F_.neg(c);
    return r;
  }
  P scale(const P& a, const Element& s) const {
    if (F_.is_zero(s)) return zero();
    P r = a;
    for (auto& c : r.coeffs) c = F_.mul(c, s);
    normalize(r);
    return r;
  }
  /// a * x^n
  P shift(const P& a, int n) const {
    if (a.is_zero()) return a;
    std::vector<Element> r(static_cast<std::size_t>(n), F_.zero());
    r.insert(r.end(), a.coeffs.begin(), a.coeffs.end());
    return P(std::move(r));
  }
  P mul(const P& a, const P& b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    std::vector<Element> r(a.coeffs.size() + b.coeffs.size() - 1, F_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (F_.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        r[i + j] = F_.add(r[i + j], F_.mul(a.coeffs[i], b.coeffs[j]));
    }
    return make(std::move(r));
  }
  P pow(const P& a, unsigned e) const {
    P result = one();
    P base = a;
    while (e != 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e != 0) base = mul(base, base);
    }
    return result;
  }

  /// Euclidean division; throws std::domain_error on division by zero.
  std::pair<P, P> divrem(const P& a, const P& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {zero(), a};
    std::vector<Element> r = a.coeffs;
    const int db = b.degree();
    std::vector<Element> q(static_cast<std::size_t>(a.degree() - db + 1), F_.zero());
    const Element inv_lead = F_.inv(leading(b));
    for (int i = a.degree(); i >= db; --i) {
      const Element c = F_.mul(r[static_cast<std::size_t>(i)], inv_lead);
      if (F_.is_zero(c)) continue;
      q[static_cast<std::size_t>(i - db)] = c;
      for (int j = 0; j <= db; ++j) {
        auto& t = r[static_cast<std::size_t>(i - db + j)];
        t = F_.sub(t, F_.mul(c, b.coeffs[static_cast<std::size_t>(j)]));
      }
    }
    r.resize(static_cast<std::size_t>(db));
    return {make(std::move(q)), make(std::move(r))};
  }
  P div(const P& a, const P& b) const { return divrem(a, b).first; }
  P rem(const P& a, const P& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return a;
    return divrem(a, b).second;
  }
  bool divides(const P& d, const P& a) const { return rem(a, d).is_zero(); }

  P monic(const P& a) const {
    if (a.is_zero()) return a;
    return scale(a, F_.inv(leading(a)));
  }
  /// Monic gcd; gcd(0, 0) = 0.
  P gcd(P a, P b) const {
    while (!b.is_zero()) {
      P r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  P derivative(const P& a) const {
    if (a.degree() <= 0) return zero();
    std::vector<Element> r(a.coeffs.size() - 1, F_.zero());
    for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
      Element k = F_.zero();
      // i mod p copies of the coefficient; i is small so repeated addition is fine.
      const auto reps = static_cast<std::uint64_t>(i) % F_.characteristic();
      for (std::uint64_t t = 0; t < reps; ++t) k = F_.add(k, a.coeffs[i]);
      r[i - 1] = k;
    }
    return make(std::move(r));
  }

  Element eval(const P& a, const Element& v) const {
    Element acc = F_.zero();
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) acc = F_.add(F_.mul(acc, v), *it);
    return acc;
  }

  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }
  P powmod(const P& a, const mpz_class& e, const P& m) const {
    P result = rem(one(), m);
    P base = rem(a, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = bits; i-- > 0;) {
      result = mulmod(result, result, m);
      if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m);
    }
    return result;
  }

  /// Inverse of the Frobenius map applied coefficientwise; requires a'(x) = 0.
  P pth_root(const P& a) const {
    const auto p = static_cast<int>(F_.characteristic());
    std::vector<Element> r;
    for (int i = 0; i <= a.degree(); i += p) r.push_back(F_.pth_root(a.coeffs[static_cast<std::size_t>(i)]));
    return make(std::move(r));
  }

  /// Uniform polynomial of degree < n.
  template <class Rng>
  P random(int n, Rng& rng) const {
    std::vector<Element> r;
    r.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.push_back(F_.random(rng));
    return make(std::move(r));
  }

 private:
  Field F_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_POLY_HPP
