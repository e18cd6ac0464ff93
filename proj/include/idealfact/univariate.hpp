#pragma once

#include <optional>
#include <vector>

#include "idealfact/poly.hpp"

namespace idealfact {

/// Dense univariate polynomial over F_q, constant term first, no trailing
/// zeros. Used for gcd and squarefree computations.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr field, std::vector<Coeff> coeffs = {});

  const FieldPtr& field() const { return field_; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Coeff leading_coeff() const { return c_.back(); }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  /// Quotient and remainder; throws std::domain_error on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  bool operator==(const UniPoly& o) const { return same_field(field_, o.field_) && c_ == o.c_; }

 private:
  void trim();
  FieldPtr field_;
  std::vector<Coeff> c_;
};

UniPoly gcd(UniPoly a, UniPoly b);
/// Monic product of the distinct irreducible factors of a nonzero f.
UniPoly squarefree_part(const UniPoly& f);

/// The single variable both polynomials live in, if any (constants fit any).
std::optional<int> common_variable(const MultiPoly& f, const MultiPoly& g);
UniPoly to_univariate(const MultiPoly& f, int v);
MultiPoly from_univariate(const UniPoly& f, int v, int nvars, const MonomialOrder& order);

/// Monic gcd of two polynomials in the same single variable.
/// gcd(f, 0) = monic(f); throws std::invalid_argument otherwise.
MultiPoly univar_gcd(const MultiPoly& f, const MultiPoly& g);
/// Monic radical of a nonzero univariate polynomial (characteristic p aware).
MultiPoly squarefree_part(const MultiPoly& f);

}  // namespace idealfact
