#pragma once

#include <memory>
#include <random>
#include <vector>

#include "idealfact/groebner.hpp"

namespace idealfact {

class CurveRing;
using RingPtr = std::shared_ptr<const CurveRing>;

/// R = F_q[X,Y]/<F>. Ideals of R are stored as contractions in F_q[X,Y]
/// under one fixed working order (grevlex).
class CurveRing {
 public:
  /// Throws std::invalid_argument for constant F and, when check_smooth is
  /// set, for a curve with an affine singular point.
  static RingPtr make(const MultiPoly& F, bool check_smooth = false);

  const FieldPtr& field() const { return F_.field(); }
  /// F in the working order.
  const MultiPoly& curve() const { return F_; }
  const MonomialOrder& order() const { return order_; }
  bool smoothness_checked() const { return smooth_checked_; }

  /// Converts a bivariate polynomial over this ring's field to the working order.
  MultiPoly lift(const MultiPoly& f) const;

 private:
  CurveRing(MultiPoly F, bool checked) : F_(std::move(F)), order_(F_.order()), smooth_checked_(checked) {}

  MultiPoly F_;
  MonomialOrder order_;
  bool smooth_checked_;
};

/// <F, dF/dX, dF/dY> = <1>, i.e. no affine singular point over the algebraic closure.
bool is_affine_smooth(const MultiPoly& F);

/// An ideal of R, held as its contraction a^c (which always contains F).
class RingIdeal {
 public:
  /// The ideal generated by gens in R; F is added to form the contraction.
  static RingIdeal make(RingPtr ring, const std::vector<MultiPoly>& gens);
  static RingIdeal unit(RingPtr ring);
  /// Wraps an ideal of F_q[X,Y] that already contains F.
  static RingIdeal from_contraction(RingPtr ring, PolyIdeal contraction);

  const RingPtr& ring() const { return ring_; }
  const PolyIdeal& contraction() const { return c_; }

  bool is_zero() const;
  bool is_unit() const { return c_.is_unit(); }
  bool contains(const MultiPoly& f) const { return c_.contains(ring_->lift(f)); }
  /// other ⊆ *this.
  bool contains(const RingIdeal& other) const { return c_.contains(other.c_); }

  /// Reduced basis of a^c under lex with y > x, increasing leading monomials.
  std::vector<MultiPoly> canonical_basis() const;

  /// D with |R/a| = q^D. Throws std::invalid_argument for the zero ideal.
  std::size_t dimension() const;

  bool operator==(const RingIdeal& o) const { return c_ == o.c_; }

 private:
  RingIdeal(RingPtr ring, PolyIdeal c) : ring_(std::move(ring)), c_(std::move(c)) {}

  RingPtr ring_;
  PolyIdeal c_;
};

/// Throws std::invalid_argument unless a and b live in the same ring.
void require_same_ring(const RingIdeal& a, const RingIdeal& b);
/// Throws std::invalid_argument for the zero ideal; `what` names the caller.
void require_nonzero(const RingIdeal& a, const char* what);

RingIdeal r_sum(const RingIdeal& a, const RingIdeal& b);
RingIdeal r_product(const RingIdeal& a, const RingIdeal& b);
RingIdeal r_intersect(const RingIdeal& a, const RingIdeal& b);
/// (a : b); b must be nonzero.
RingIdeal r_colon(const RingIdeal& a, const RingIdeal& b);
/// rad(a) = rad(a^c)^e; a must be nonzero.
RingIdeal r_radical(const RingIdeal& a);
/// a^e by repeated multiplication (e >= 0).
RingIdeal r_power(const RingIdeal& a, unsigned e);

/// R/a as an F_q-vector space with basis the standard monomials of a^c.
struct ResidueRing {
  RingIdeal ideal;
  std::vector<Monomial> basis;
  std::size_t dimension() const { return basis.size(); }
};

ResidueRing residue_ring(const RingIdeal& a);

/// Normal form of b modulo a^c.
MultiPoly residue(const RingIdeal& a, const MultiPoly& b);
/// Normal form of b^e modulo a^c by square-and-multiply.
MultiPoly residue_pow(const RingIdeal& a, const MultiPoly& b, std::uint64_t e);
/// Normal form of b^(q^k) modulo a^c, by k successive q-th powers.
MultiPoly residue_frobenius(const RingIdeal& a, const MultiPoly& b, unsigned k);
/// Normal form of b^((q^d - 1)/(q - 1)) = b * b^q * ... * b^(q^(d-1)).
MultiPoly residue_norm(const RingIdeal& a, const MultiPoly& b, unsigned d);

/// u_k + relative_to, with x^(q^k) - x and y^(q^k) - y reduced modulo relative_to.
RingIdeal frobenius_ideal(const RingPtr& ring, unsigned k, const RingIdeal& relative_to);

/// <x^(q^k) - x, y^(q^k) - y> built directly. Only sensible for small q^k.
RingIdeal materialized_frobenius_ideal(const RingPtr& ring, unsigned k);

/// Uniform nonzero element of R/a in normal form. a must be proper and nonzero.
MultiPoly random_element(const RingIdeal& a, std::mt19937_64& rng);

}  // namespace idealfact
