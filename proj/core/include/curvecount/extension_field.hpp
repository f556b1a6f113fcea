#ifndef CURVECOUNT_EXTENSION_FIELD_HPP
#define CURVECOUNT_EXTENSION_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "curvecount/poly.hpp"
#include "curvecount/prime_field.hpp"

namespace curvecount {

using PolyFp = Poly<PrimeField::Element>;

/// (p, k, modulus) naming a model of F_{p^k}. The modulus is stored low
/// coefficient first and is monic of degree k.
struct FieldDescriptor {
  std::uint32_t p = 2;
  int k = 1;
  std::vector<std::uint32_t> modulus;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Descriptor of F_{p^k} using the canonical modulus from find_irreducible.
FieldDescriptor canonical_descriptor(std::uint32_t p, int k);

/**
 * @brief F_p[t]/(modulus) with elements as length-k coefficient vectors.
 *
 * Elements are reduced representatives (degree < k). The class is the
 * coefficient-field context for PolyRing and satisfies the same interface
 * as PrimeField.
 */
class ExtensionField {
 public:
  using Element = std::vector<std::uint32_t>;

  /// Validates p prime and the modulus monic of degree k >= 1; when
  /// check_irreducible is set the modulus is also tested for irreducibility.
  /// Throws std::invalid_argument on failure.
  explicit ExtensionField(FieldDescriptor desc, bool check_irreducible = true);

  const FieldDescriptor& descriptor() const noexcept { return desc_; }
  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t characteristic() const noexcept { return desc_.p; }
  int degree() const noexcept { return desc_.k; }
  mpz_class order() const;

  Element zero() const { return Element(static_cast<std::size_t>(desc_.k), 0); }
  Element one() const;
  /// Class of t, the adjoined root of the modulus.
  Element generator() const;
  Element embed(std::uint32_t c) const;
  /// Reduces a polynomial in t modulo the modulus.
  Element reduce(const PolyFp& a) const;
  PolyFp lift(const Element& a) const;

  bool is_zero(const Element& a) const noexcept;
  bool is_one(const Element& a) const noexcept;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  /// Throws std::domain_error on zero.
  Element inv(const Element& a) const;
  Element pow(const Element& a, const mpz_class& e) const;
  Element frobenius(const Element& a) const;
  Element pth_root(const Element& a) const;

  template <class Rng>
  Element random(Rng& rng) const {
    Element r(static_cast<std::size_t>(desc_.k));
    for (auto& c : r) c = base_.random(rng);
    return r;
  }

  std::string to_string(const Element& a) const;

 private:
  FieldDescriptor desc_;
  PrimeField base_;
};

/**
 * @brief Checked field element carrying its field.
 *
 * Operands from different descriptors are rejected with
 * std::invalid_argument.
 */
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const ExtensionField> field, ExtensionField::Element value);

  const ExtensionField& field() const noexcept { return *field_; }
  const ExtensionField::Element& value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(const mpz_class& e) const;
  FieldElement frobenius() const;
  bool is_zero() const { return field_->is_zero(value_); }

  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  std::shared_ptr<const ExtensionField> field_;
  ExtensionField::Element value_;
};

}  // namespace curvecount

#endif  // CURVECOUNT_EXTENSION_FIELD_HPP
