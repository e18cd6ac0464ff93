#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace idealfact {

/// Raw element code of a finite field, always in [0, q).
using Coeff = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// The finite field F_q with q = p^l.
///
/// Elements are plain integer codes. For l = 1 the code is the residue mod p.
/// For l > 1 the base-p digits of the code are the coefficients (lowest
/// degree first) of the element written as a polynomial in the generator `a`,
/// a root of the defining modulus. Multiplication in extension fields goes
/// through discrete log tables built at construction.
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static FieldPtr prime(std::uint32_t p);
  /// F_{p^l} defined by the first monic irreducible polynomial of degree l
  /// over F_p, ordering candidates by sum c_i p^i over the non-leading
  /// coefficients (e.g. a^2 + a + 1 for F_4).
  static FieldPtr extension(std::uint32_t p, unsigned l);
  /// `modulus` holds l + 1 coefficients, constant term first, and must be
  /// monic and irreducible over F_p.
  static FieldPtr extension(std::uint32_t p, unsigned l, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return l_; }
  std::uint32_t order() const { return q_; }
  bool is_prime_field() const { return l_ == 1; }
  /// Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const;
  Coeff neg(Coeff a) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff pow(Coeff a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Coeff from_integer(std::int64_t n) const;
  /// The generator `a` of an extension field. Throws for prime fields.
  Coeff generator() const;
  /// Base-p digits of `a` (length l).
  std::vector<std::uint32_t> digits(Coeff a) const;
  Coeff from_digits(std::span<const std::uint32_t> digits) const;
  /// Inverse of the absolute Frobenius a -> a^p, i.e. a -> a^{p^{l-1}}.
  Coeff frobenius_inverse(Coeff a) const { return pow(a, pow_p_l_minus_1_); }

  /// "F_13", "F_2^2".
  std::string name() const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && l_ == other.l_ && modulus_ == other.modulus_;
  }

 private:
  FiniteField(std::uint32_t p, unsigned l, std::vector<std::uint32_t> modulus);
  void build_log_tables();

  std::uint32_t p_;
  unsigned l_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint64_t pow_p_l_minus_1_ = 1;
  std::vector<Coeff> exp_;  // exp_[i] = g^i, i < q - 1
  std::vector<std::uint32_t> log_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime_number(std::uint64_t n);

/// Dense polynomials over F_p given constant term first.
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned degree);

/// A field element bundled with its field, for use at API boundaries.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Coeff value);
  static FieldElement from_integer(FieldPtr field, std::int64_t n);

  const FieldPtr& field() const { return field_; }
  Coeff value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& b) const;

 private:
  const FiniteField& checked(const FieldElement& b) const;

  FieldPtr field_;
  Coeff value_;
};

}  // namespace idealfact
