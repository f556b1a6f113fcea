#ifndef CURVECOUNT_SRC_TABLE_FIELD_HPP
#define CURVECOUNT_SRC_TABLE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

namespace curvecount::detail {

/// F_{p^m} with log/antilog tables; elements are integers whose base-p
/// digits are the coefficients in the canonical modulus. Intended for the
/// small fields scanned by the brute-force oracle.
class TableField {
 public:
  TableField(std::uint32_t p, int m);

  std::uint32_t p() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    return add_slow(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  std::vector<std::uint32_t> digits(std::uint32_t a) const;

 private:
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  int m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Cached instance per (p, m).
std::shared_ptr<const TableField> table_field(std::uint32_t p, int m);

}  // namespace curvecount::detail

#endif  // CURVECOUNT_SRC_TABLE_FIELD_HPP
