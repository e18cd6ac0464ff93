#pragma once

#include <vector>

#include "idealfact/poly.hpp"

namespace idealfact {

/// Reduced Gröbner basis: monic, auto-reduced, sorted by increasing leading
/// monomial. The zero ideal has an empty basis; the unit ideal is {1}.
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order);

/// Normal form of f modulo a Gröbner basis (all in f's ring and order).
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis);

/// An ideal of F_q[X,Y] or F_q[X,Y,T], held as its reduced Gröbner basis.
///
/// The basis is computed eagerly at construction; instances are immutable
/// and safe to share across threads.
class PolyIdeal {
 public:
  /// gens must be nonempty (use a zero polynomial for the zero ideal) and
  /// share one field and variable count; they are converted to `order`.
  PolyIdeal(std::vector<MultiPoly> gens, MonomialOrder order);

  static PolyIdeal unit(FieldPtr field, int nvars, MonomialOrder order);

  const std::vector<MultiPoly>& generators() const { return gens_; }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  const FieldPtr& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }

  bool is_zero() const { return basis_.empty(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }

  bool contains(const MultiPoly& f) const;
  /// other ⊆ *this.
  bool contains(const PolyIdeal& other) const;

  /// Equal ideals under the same order have identical reduced bases.
  bool operator==(const PolyIdeal& o) const { return order_ == o.order_ && basis_ == o.basis_; }

 private:
  FieldPtr field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_;
  std::vector<MultiPoly> basis_;
};

MultiPoly reduce(const MultiPoly& f, const PolyIdeal& ideal);

PolyIdeal ideal_sum(const PolyIdeal& i, const PolyIdeal& j);
PolyIdeal ideal_product(const PolyIdeal& i, const PolyIdeal& j);
/// I ∩ J by eliminating T from T·I + (1 - T)·J.
PolyIdeal ideal_intersect(const PolyIdeal& i, const PolyIdeal& j);
/// (I : f), via I ∩ ⟨f⟩ divided by f.
PolyIdeal ideal_colon(const PolyIdeal& i, const MultiPoly& f);
/// (I : J) = intersection of (I : g) over the basis elements g of J.
PolyIdeal ideal_colon(const PolyIdeal& i, const PolyIdeal& j);

/// Monic univariate polynomial of least degree in variable v lying in a
/// zero-dimensional ideal. Returns the constant 1 for the unit ideal.
MultiPoly minimal_polynomial(const PolyIdeal& ideal, int v);

/// Radical of a zero-dimensional ideal by adding the squarefree parts of
/// the minimal polynomials of every variable.
PolyIdeal zerodim_radical(const PolyIdeal& ideal);

/// Monomials outside the leading-term ideal, increasing in the ideal's order.
/// Empty for the unit ideal; throws std::invalid_argument when the quotient
/// is infinite (zero or positive-dimensional ideal).
std::vector<Monomial> standard_monomials(const PolyIdeal& ideal);

/// Number of standard monomials, so that |F_q[vars]/I| = q^D.
std::size_t quotient_dimension(const PolyIdeal& ideal);

}  // namespace idealfact
