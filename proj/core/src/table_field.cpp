#include "table_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "curvecount/factor.hpp"

namespace curvecount::detail {

TableField::TableField(std::uint32_t p, int m) : p_(p), m_(m), q_(1) {
  if (m < 1) throw std::invalid_argument("table field degree must be positive");
  for (int i = 0; i < m; ++i) {
    if (q_ > (1U << 24U) / p) throw std::invalid_argument("table field too large");
    q_ *= p;
  }
  modulus_ = find_irreducible(p, m).coeffs;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  if (q_ == 2) {
    exp_[0] = 1;
    return;
  }
  for (std::uint32_t g = 2; g < q_; ++g) {
    std::uint32_t cur = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      if (i > 0 && cur == 1) {
        primitive = false;
        break;
      }
      exp_[i] = cur;
      cur = mul_poly(cur, g);
    }
    if (primitive && cur == 1) {
      for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
      return;
    }
  }
  throw std::logic_error("no primitive element found");
}

std::vector<std::uint32_t> TableField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(m_));
  for (auto& c : d) {
    c = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t TableField::add_slow(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t scale = 1;
  for (int i = 0; i < m_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

std::uint32_t TableField::mul_poly(std::uint32_t a, std::uint32_t b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  const auto k = static_cast<std::size_t>(m_);
  std::vector<std::uint64_t> t(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) t[i + j] = (t[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
  for (std::size_t i = 2 * k - 1; i-- > k;) {
    const auto c = t[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) t[i - k + j] = (t[i - k + j] + (p_ - c) * modulus_[j]) % p_;
    t[i] = 0;
  }
  std::uint32_t r = 0;
  for (std::size_t i = k; i-- > 0;) r = r * p_ + static_cast<std::uint32_t>(t[i]);
  return r;
}

std::shared_ptr<const TableField> table_field(std::uint32_t p, int m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const TableField>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) slot = std::make_shared<const TableField>(p, m);
  return slot;
}

}  // namespace curvecount::detail
