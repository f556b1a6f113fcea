#ifndef CURVECOUNT_PRIME_FIELD_HPP
#define CURVECOUNT_PRIME_FIELD_HPP

#include <cstdint>
#include <random>

namespace curvecount {

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/**
 * @brief Arithmetic in Z/pZ for a word-size prime p.
 *
 * Elements are plain residues in [0, p). The class is a small immutable
 * context object; copying it is free and all methods are const.
 */
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over the prime field (always 1 here).
  int degree() const noexcept { return 1; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element from_int(std::int64_t v) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Element>(r < 0 ? r + m : r);
  }

  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    if (p_ == 2) return a & b;
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Throws std::domain_error for a == 0.
  Element inv(Element a) const;
  Element frobenius(Element a) const noexcept { return a; }
  Element pth_root(Element a) const noexcept { return a; }

  template <class Rng>
  Element random(Rng& rng) const {
    std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
    return dist(rng);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_PRIME_FIELD_HPP
