#include "idealfact/curve_ring.hpp"

#include <stdexcept>

namespace idealfact {

bool is_affine_smooth(const MultiPoly& F) {
  const PolyIdeal jac({F, F.derivative(X), F.derivative(Y)}, F.order());
  return jac.is_unit();
}

RingPtr CurveRing::make(const MultiPoly& F, bool check_smooth) {
  if (F.nvars() != 2) throw std::invalid_argument("curve polynomial must be bivariate");
  if (F.is_constant()) throw std::invalid_argument("curve polynomial must be nonconstant");
  MultiPoly G = F.with_order(MonomialOrder::grevlex()).monic();
  if (check_smooth && !is_affine_smooth(G)) throw std::invalid_argument("curve has an affine singular point");
  return RingPtr(new CurveRing(std::move(G), check_smooth));
}

MultiPoly CurveRing::lift(const MultiPoly& f) const {
  if (!same_field(f.field(), field())) throw std::invalid_argument("polynomial is over a different field than the ring");
  if (f.nvars() != 2) throw std::invalid_argument("ring elements must be bivariate");
  return f.with_order(order_);
}

RingIdeal RingIdeal::make(RingPtr ring, const std::vector<MultiPoly>& gens) {
  std::vector<MultiPoly> g{ring->curve()};
  for (const auto& f : gens) g.push_back(ring->lift(f));
  PolyIdeal c(std::move(g), ring->order());
  return RingIdeal(std::move(ring), std::move(c));
}

RingIdeal RingIdeal::unit(RingPtr ring) {
  PolyIdeal c = PolyIdeal::unit(ring->field(), 2, ring->order());
  return RingIdeal(std::move(ring), std::move(c));
}

RingIdeal RingIdeal::from_contraction(RingPtr ring, PolyIdeal contraction) {
  if (!(contraction.order() == ring->order()) || contraction.nvars() != 2 ||
      !same_field(contraction.field(), ring->field()))
    throw std::invalid_argument("contraction does not live in the ring's polynomial ring");
  if (!contraction.contains(ring->curve())) throw std::invalid_argument("contraction must contain the curve polynomial");
  return RingIdeal(std::move(ring), std::move(contraction));
}

bool RingIdeal::is_zero() const { return c_.basis().size() == 1 && c_.basis()[0] == ring_->curve(); }

std::vector<MultiPoly> RingIdeal::canonical_basis() const {
  return buchberger(c_.basis(), MonomialOrder::lex());
}

std::size_t RingIdeal::dimension() const {
  require_nonzero(*this, "residue ring");
  return quotient_dimension(c_);
}

void require_same_ring(const RingIdeal& a, const RingIdeal& b) {
  if (a.ring() != b.ring() && !(a.ring()->curve() == b.ring()->curve()))
    throw std::invalid_argument("ideals belong to different rings");
}

void require_nonzero(const RingIdeal& a, const char* what) {
  if (a.is_zero()) throw std::invalid_argument(std::string(what) + ": the zero ideal is not allowed");
}

RingIdeal r_sum(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  if (a.is_unit() || a.contains(b)) return a;
  if (b.is_unit() || b.contains(a)) return b;
  return RingIdeal::from_contraction(a.ring(), ideal_sum(a.contraction(), b.contraction()));
}

RingIdeal r_product(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const PolyIdeal prod = ideal_product(a.contraction(), b.contraction());
  return RingIdeal::from_contraction(a.ring(), ideal_sum(prod, PolyIdeal({a.ring()->curve()}, a.ring()->order())));
}

RingIdeal r_intersect(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return RingIdeal::from_contraction(a.ring(), ideal_intersect(a.contraction(), b.contraction()));
}

RingIdeal r_colon(const RingIdeal& a, const RingIdeal& b) {
  require_same_ring(a, b);
  require_nonzero(b, "colon");
  if (a.contains(b)) return RingIdeal::unit(a.ring());
  if (b.is_unit()) return a;
  return RingIdeal::from_contraction(a.ring(), ideal_colon(a.contraction(), b.contraction()));
}

RingIdeal r_radical(const RingIdeal& a) {
  require_nonzero(a, "radical");
  return RingIdeal::from_contraction(a.ring(), zerodim_radical(a.contraction()));
}

RingIdeal r_power(const RingIdeal& a, unsigned e) {
  RingIdeal out = RingIdeal::unit(a.ring());
  for (unsigned i = 0; i < e; ++i) out = r_product(out, a);
  return out;
}

ResidueRing residue_ring(const RingIdeal& a) {
  require_nonzero(a, "residue ring");
  return ResidueRing{a, standard_monomials(a.contraction())};
}

MultiPoly residue(const RingIdeal& a, const MultiPoly& b) { return reduce(a.ring()->lift(b), a.contraction()); }

MultiPoly residue_pow(const RingIdeal& a, const MultiPoly& b, std::uint64_t e) {
  const auto& basis = a.contraction().basis();
  MultiPoly base = residue(a, b);
  MultiPoly acc = normal_form(MultiPoly::constant(a.ring()->field(), 2, a.ring()->order(), 1), basis);
  while (e > 0) {
    if (e & 1) acc = normal_form(acc * base, basis);
    e >>= 1;
    if (e > 0) base = normal_form(base * base, basis);
  }
  return acc;
}

MultiPoly residue_frobenius(const RingIdeal& a, const MultiPoly& b, unsigned k) {
  MultiPoly out = residue(a, b);
  for (unsigned i = 0; i < k; ++i) out = residue_pow(a, out, a.ring()->field()->order());
  return out;
}

MultiPoly residue_norm(const RingIdeal& a, const MultiPoly& b, unsigned d) {
  const auto& basis = a.contraction().basis();
  MultiPoly conj = residue(a, b);
  MultiPoly out = conj;
  for (unsigned i = 1; i < d; ++i) {
    conj = residue_pow(a, conj, a.ring()->field()->order());
    out = normal_form(out * conj, basis);
  }
  return out;
}

RingIdeal frobenius_ideal(const RingPtr& ring, unsigned k, const RingIdeal& relative_to) {
  if (k < 1) throw std::invalid_argument("Frobenius ideal index must be positive");
  require_nonzero(relative_to, "Frobenius ideal");
  if (relative_to.is_unit()) return relative_to;
  const auto& field = ring->field();
  std::vector<MultiPoly> gens;
  for (int v : {X, Y}) {
    const MultiPoly t = MultiPoly::variable(field, 2, ring->order(), v);
    gens.push_back(residue_frobenius(relative_to, t, k) - t);
  }
  return r_sum(relative_to, RingIdeal::make(ring, gens));
}

RingIdeal materialized_frobenius_ideal(const RingPtr& ring, unsigned k) {
  const auto& field = ring->field();
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= field->order();
  std::vector<MultiPoly> gens;
  for (int v : {X, Y}) {
    const MultiPoly t = MultiPoly::variable(field, 2, ring->order(), v);
    gens.push_back(MultiPoly::monomial(field, 2, ring->order(), 1, Monomial::var(v, static_cast<std::uint32_t>(e))) - t);
  }
  return RingIdeal::make(ring, gens);
}

MultiPoly random_element(const RingIdeal& a, std::mt19937_64& rng) {
  if (a.is_unit()) throw std::invalid_argument("random element: R/R has no nonzero elements");
  const ResidueRing rr = residue_ring(a);
  const auto& ring = *a.ring();
  std::uniform_int_distribution<Coeff> coeff(0, ring.field()->order() - 1);
  for (;;) {
    std::vector<Term> terms;
    for (const auto& m : rr.basis) terms.push_back({m, coeff(rng)});
    MultiPoly b = MultiPoly::from_terms(ring.field(), 2, ring.order(), std::move(terms));
    if (!b.is_zero()) return b;
  }
}

}  // namespace idealfact
