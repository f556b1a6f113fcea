#include "curvecount/extension_field.hpp"

#include <sstream>
#include <stdexcept>

#include "curvecount/factor.hpp"

namespace curvecount {

FieldDescriptor canonical_descriptor(std::uint32_t p, int k) {
  return FieldDescriptor{p, k, find_irreducible(p, k).coeffs};
}

ExtensionField::ExtensionField(FieldDescriptor desc, bool check_irreducible)
    : desc_(std::move(desc)), base_(desc_.p) {
  if (desc_.k < 1) throw std::invalid_argument("extension degree must be at least 1");
  PolyRing<PrimeField> R(base_);
  const PolyFp m = R.make(desc_.modulus);
  if (m.degree() != desc_.k || !base_.is_one(R.leading(m)) || m.coeffs != desc_.modulus)
    throw std::invalid_argument("field modulus must be monic of degree k");
  if (check_irreducible && !is_irreducible(R, m)) throw std::invalid_argument("field modulus is reducible");
}

mpz_class ExtensionField::order() const { return field_order(*this); }

ExtensionField::Element ExtensionField::one() const { return embed(1); }

ExtensionField::Element ExtensionField::embed(std::uint32_t c) const {
  Element r = zero();
  r[0] = c % desc_.p;
  return r;
}

ExtensionField::Element ExtensionField::generator() const {
  PolyRing<PrimeField> R(base_);
  return reduce(R.x());
}

ExtensionField::Element ExtensionField::reduce(const PolyFp& a) const {
  PolyRing<PrimeField> R(base_);
  const PolyFp r = R.rem(a, PolyFp(desc_.modulus));
  Element out = zero();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out[i] = r.coeffs[i];
  return out;
}

PolyFp ExtensionField::lift(const Element& a) const {
  PolyRing<PrimeField> R(base_);
  return R.make(a);
}

bool ExtensionField::is_zero(const Element& a) const noexcept {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

bool ExtensionField::is_one(const Element& a) const noexcept {
  if (a.empty() || a[0] != 1) return false;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

ExtensionField::Element ExtensionField::add(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtensionField::Element ExtensionField::sub(const Element& a, const Element& b) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtensionField::Element ExtensionField::neg(const Element& a) const {
  Element r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtensionField::Element ExtensionField::mul(const Element& a, const Element& b) const {
  const auto k = static_cast<std::size_t>(desc_.k);
  if (k == 1) return Element{base_.mul(a[0], b[0])};
  const std::uint64_t p = desc_.p;
  // Unreduced accumulation is safe while p < 2^16.
  std::vector<std::uint64_t> t(2 * k - 1, 0);
  const bool small = p < (1U << 16U);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (small) {
        t[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      } else {
        t[i + j] = (t[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] % p) % p;
      }
    }
  }
  for (auto& v : t) v %= p;
  const auto& m = desc_.modulus;
  for (std::size_t i = 2 * k - 1; i-- > k;) {
    const std::uint64_t c = t[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j < k; ++j) t[i - k + j] = (t[i - k + j] + (p - c) * m[j]) % p;
    t[i] = 0;
  }
  Element r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(t[i] % p);
  return r;
}

ExtensionField::Element ExtensionField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_" + std::to_string(desc_.p) + "^" + std::to_string(desc_.k));
  if (desc_.k == 1) return Element{base_.inv(a[0])};
  // Extended Euclid in F_p[t]: track s with s * a = r mod modulus.
  PolyRing<PrimeField> R(base_);
  PolyFp r0(desc_.modulus), r1 = R.make(a);
  PolyFp s0, s1 = R.one();
  while (r1.degree() > 0) {
    auto [q, r] = R.divrem(r0, r1);
    PolyFp s = R.sub(s0, R.mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return reduce(R.scale(s1, base_.inv(r1.coeffs[0])));
}

ExtensionField::Element ExtensionField::pow(const Element& a, const mpz_class& e) const {
  Element result = one();
  if (e == 0) return result;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

ExtensionField::Element ExtensionField::frobenius(const Element& a) const { return pow(a, mpz_class(desc_.p)); }

ExtensionField::Element ExtensionField::pth_root(const Element& a) const {
  Element r = a;
  for (int i = 1; i < desc_.k; ++i) r = frobenius(r);
  return r;
}

std::string ExtensionField::to_string(const Element& a) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ']';
  return os.str();
}

FieldElement::FieldElement(std::shared_ptr<const ExtensionField> field, ExtensionField::Element value)
    : field_(std::move(field)), value_(std::move(value)) {
  if (value_.size() != static_cast<std::size_t>(field_->degree()))
    throw std::invalid_argument("element length does not match extension degree");
  for (auto& c : value_) c %= field_->characteristic();
}

void FieldElement::check_same(const FieldElement& o) const {
  if (field_ != o.field_ && !(field_->descriptor() == o.field_->descriptor()))
    throw std::invalid_argument("field descriptor mismatch");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(const mpz_class& e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(value_)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return value_ == o.value_;
}

}  // namespace curvecount
