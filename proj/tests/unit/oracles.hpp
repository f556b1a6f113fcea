// Independent reference computations used only by the tests.
#ifndef CURVECOUNT_TESTS_ORACLES_HPP
#define CURVECOUNT_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::int64_t>;  // lowest degree first, entries mod p

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a by b over F_p.
inline Coeffs poly_rem(Coeffs a, const Coeffs& b, std::int64_t p) {
  trim(a);
  const auto lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::int64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod(a[shift + i] - c * b[i], p);
    trim(a);
  }
  return a;
}

/// Irreducibility by trial division by every monic polynomial of degree <= n/2.
inline bool irreducible_by_trial(const Coeffs& f, std::int64_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    Coeffs g(static_cast<std::size_t>(d) + 1, 0);
    g.back() = 1;
    for (;;) {
      if (poly_rem(f, g, p).empty()) return false;
      int i = 0;
      while (i < d && ++g[static_cast<std::size_t>(i)] == p) g[static_cast<std::size_t>(i++)] = 0;
      if (i == d) break;
    }
  }
  return true;
}

/// Determinant over F_p by Gaussian elimination.
inline std::int64_t det_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  const std::size_t n = m.size();
  std::int64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && mod(m[piv][c], p) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = mod(-det, p);
    }
    const std::int64_t inv = inv_mod(m[c][c], p);
    det = det * mod(m[c][c], p) % p;
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::int64_t f = mod(m[r][c], p) * inv % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
    }
  }
  return det;
}

/// Sylvester resultant of a and b (lowest degree first) over F_p.
inline std::int64_t sylvester_resultant(const Coeffs& a, const Coeffs& b, std::int64_t p) {
  const std::size_t m = a.size() - 1, n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<std::int64_t>> s(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  return det_mod(s, p);
}

/// Composite Simpson rule on [a, b] with n (even) panels, in long double.
template <class F>
long double simpson(F f, long double a, long double b, int n) {
  const long double h = (b - a) / n;
  long double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4 : 2);
  return sum * h / 3;
}

}  // namespace oracle

#endif
