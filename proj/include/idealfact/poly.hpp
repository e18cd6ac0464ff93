#pragma once

#include <span>
#include <vector>

#include "idealfact/field.hpp"
#include "idealfact/monomial.hpp"

namespace idealfact {

struct Term {
  Monomial mono;
  Coeff coeff;
  bool operator==(const Term&) const = default;
};

/// Multivariate polynomial over F_q in 2 or 3 variables.
///
/// Terms are kept strictly decreasing under the polynomial's monomial order
/// with no zero coefficients, so the leading term is terms().front().
/// Binary operations require the same field, variable count and order.
class MultiPoly {
 public:
  MultiPoly(FieldPtr field, int nvars, MonomialOrder order);

  static MultiPoly constant(FieldPtr field, int nvars, MonomialOrder order, Coeff c);
  static MultiPoly variable(FieldPtr field, int nvars, MonomialOrder order, int v);
  static MultiPoly monomial(FieldPtr field, int nvars, MonomialOrder order, Coeff c, const Monomial& m);
  /// Sorts, merges equal monomials and drops zeros.
  static MultiPoly from_terms(FieldPtr field, int nvars, MonomialOrder order, std::vector<Term> terms);
  /// Terms must already be strictly decreasing with nonzero coefficients.
  static MultiPoly from_sorted_terms(FieldPtr field, int nvars, MonomialOrder order, std::vector<Term> terms);

  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

  /// Requires a nonzero polynomial.
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(int v) const;
  /// True when every term involves only variable v (constants included).
  bool is_univariate_in(int v) const;
  /// Coefficient of m, 0 when absent.
  Coeff coeff_of(const Monomial& m) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(Coeff c) const;
  /// c * m * this.
  MultiPoly times_term(Coeff c, const Monomial& m) const;
  MultiPoly monic() const;
  MultiPoly pow(std::uint64_t e) const;
  MultiPoly derivative(int v) const;

  /// Same polynomial re-sorted under another order.
  MultiPoly with_order(const MonomialOrder& order) const;
  /// Same polynomial viewed in a ring with `nvars` variables; dropping a
  /// variable requires it to be absent.
  MultiPoly with_nvars(int nvars, const MonomialOrder& order) const;

  /// Structural equality: field, variable count, order and terms.
  bool operator==(const MultiPoly& o) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  FieldPtr field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Exact division. Throws InternalError if g does not divide f.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

}  // namespace idealfact
