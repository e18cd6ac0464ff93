#include "idealfact/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "detail/terms.hpp"
#include "idealfact/errors.hpp"
#include "idealfact/univariate.hpp"

namespace idealfact {

namespace {

// Full reduction of `work` by the polynomials in `basis`.
std::vector<Term> reduce_terms(std::vector<Term> work, const std::vector<const MultiPoly*>& basis,
                               const FiniteField& k, const MonomialOrder& order) {
  std::vector<Term> rem;
  std::size_t pos = 0;
  while (pos < work.size()) {
    const Term t = work[pos];
    const MultiPoly* red = nullptr;
    for (const MultiPoly* g : basis) {
      if (g->leading_monomial().divides(t.mono)) {
        red = g;
        break;
      }
    }
    if (red == nullptr) {
      rem.push_back(t);
      ++pos;
      continue;
    }
    const Coeff c = k.div(t.coeff, red->leading_coeff());
    const Monomial m = t.mono / red->leading_monomial();
    work = detail::sub_scaled(std::span<const Term>(work).subspan(pos + 1), red->terms().subspan(1), c, m, k, order);
    pos = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class BuchbergerRun {
 public:
  BuchbergerRun(FieldPtr field, int nvars, MonomialOrder order)
      : field_(std::move(field)), nvars_(nvars), order_(order) {}

  // Returns false when the ideal became the unit ideal.
  bool add_generator(const MultiPoly& f) {
    MultiPoly h = reduced(f.terms());
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    insert(h.monic());
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t n = 1; n < pairs_.size(); ++n)
        if (order_.less(pairs_[n].lcm, pairs_[best].lcm)) best = n;
      const Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      MultiPoly s = reduced(spoly(pr));
      if (s.is_zero()) continue;
      if (s.is_constant()) return false;
      insert(s.monic());
    }
    return true;
  }

  std::vector<MultiPoly> reduced_basis() const {
    std::vector<const MultiPoly*> act = active_polys();
    std::vector<MultiPoly> out;
    for (const MultiPoly* g : act) {
      std::vector<const MultiPoly*> others;
      for (const MultiPoly* o : act)
        if (o != g) others.push_back(o);
      std::vector<Term> tail(g->terms().begin() + 1, g->terms().end());
      std::vector<Term> red = reduce_terms(std::move(tail), others, *field_, order_);
      red.insert(red.begin(), g->terms().front());
      out.push_back(MultiPoly::from_sorted_terms(field_, nvars_, order_, std::move(red)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const MultiPoly& a, const MultiPoly& b) {
      return order_.less(a.leading_monomial(), b.leading_monomial());
    });
    return out;
  }

 private:
  std::vector<const MultiPoly*> active_polys() const {
    std::vector<const MultiPoly*> act;
    for (std::size_t n = 0; n < polys_.size(); ++n)
      if (active_[n]) act.push_back(&polys_[n]);
    return act;
  }

  MultiPoly reduced(std::span<const Term> terms) const {
    std::vector<Term> t(terms.begin(), terms.end());
    return MultiPoly::from_sorted_terms(field_, nvars_, order_, reduce_terms(std::move(t), active_polys(), *field_, order_));
  }

  std::vector<Term> spoly(const Pair& pr) const {
    const MultiPoly& a = polys_[pr.i];
    const MultiPoly& b = polys_[pr.j];
    const Monomial ma = pr.lcm / a.leading_monomial();
    const Monomial mb = pr.lcm / b.leading_monomial();
    // Both are monic, so the leading terms cancel.
    std::vector<Term> ta;
    ta.reserve(a.size());
    for (std::size_t n = 1; n < a.size(); ++n) ta.push_back({a.terms()[n].mono * ma, a.terms()[n].coeff});
    return detail::sub_scaled(ta, b.terms().subspan(1), 1, mb, *field_, order_);
  }

  // Gebauer–Möller installation of a new basis element.
  void insert(MultiPoly h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(false);

    std::vector<Pair> cands;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) cands.push_back({g, hi, lh.lcm(polys_[g].leading_monomial())});
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool keep = lh.coprime_to(polys_[cands[a].i].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cands.size() && keep; ++b)
          if (cands[b].lcm.divides(cands[a].lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(cands[a].lcm)) keep = false;
      }
      if (keep) kept.push_back(cands[a]);
    }
    std::vector<Pair> next;
    for (const Pair& pr : pairs_) {
      const Monomial li = polys_[pr.i].leading_monomial().lcm(lh);
      const Monomial lj = polys_[pr.j].leading_monomial().lcm(lh);
      if (!lh.divides(pr.lcm) || li == pr.lcm || lj == pr.lcm) next.push_back(pr);
    }
    for (const Pair& pr : kept)
      if (!lh.coprime_to(polys_[pr.i].leading_monomial())) next.push_back(pr);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading_monomial())) active_[g] = false;
    active_[hi] = true;
  }

  FieldPtr field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

PolyIdeal zero_ideal(const FieldPtr& field, int nvars, const MonomialOrder& order) {
  return PolyIdeal({MultiPoly(field, nvars, order)}, order);
}

}  // namespace

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const FieldPtr& field = gens.front().field();
  const int nvars = gens.front().nvars();
  std::vector<MultiPoly> input;
  for (const auto& g : gens) {
    if (!same_field(g.field(), field) || g.nvars() != nvars)
      throw std::invalid_argument("buchberger: generators live in different rings");
    if (!g.is_zero()) input.push_back(g.with_order(order));
  }
  std::sort(input.begin(), input.end(), [&](const MultiPoly& a, const MultiPoly& b) {
    const int c = order.compare(a.leading_monomial(), b.leading_monomial());
    return c != 0 ? c < 0 : a.size() < b.size();
  });
  BuchbergerRun run(field, nvars, order);
  for (const auto& f : input)
    if (!run.add_generator(f)) return {MultiPoly::constant(field, nvars, order, 1)};
  return run.reduced_basis();
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis) {
  std::vector<const MultiPoly*> ptrs;
  for (const auto& g : basis) {
    if (!same_field(g.field(), f.field()) || g.nvars() != f.nvars() || !(g.order() == f.order()))
      throw std::invalid_argument("normal_form: mismatched rings");
    ptrs.push_back(&g);
  }
  std::vector<Term> t(f.terms().begin(), f.terms().end());
  return MultiPoly::from_sorted_terms(f.field(), f.nvars(), f.order(),
                                      reduce_terms(std::move(t), ptrs, *f.field(), f.order()));
}

PolyIdeal::PolyIdeal(std::vector<MultiPoly> gens, MonomialOrder order) : order_(order) {
  if (gens.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  field_ = gens.front().field();
  nvars_ = gens.front().nvars();
  for (auto& g : gens) g = g.with_order(order);
  gens_ = std::move(gens);
  basis_ = buchberger(gens_, order_);
}

PolyIdeal PolyIdeal::unit(FieldPtr field, int nvars, MonomialOrder order) {
  return PolyIdeal({MultiPoly::constant(std::move(field), nvars, order, 1)}, order);
}

bool PolyIdeal::contains(const MultiPoly& f) const {
  if (!same_field(f.field(), field_) || f.nvars() != nvars_) throw std::invalid_argument("membership test across rings");
  return normal_form(f.with_order(order_), basis_).is_zero();
}

bool PolyIdeal::contains(const PolyIdeal& other) const {
  for (const auto& g : other.basis())
    if (!contains(g)) return false;
  return true;
}

MultiPoly reduce(const MultiPoly& f, const PolyIdeal& ideal) {
  if (!same_field(f.field(), ideal.field()) || f.nvars() != ideal.nvars() || !(f.order() == ideal.order()))
    throw std::invalid_argument("reduce: polynomial and ideal live in different rings");
  return normal_form(f, ideal.basis());
}

namespace {

void check_same_ring(const PolyIdeal& i, const PolyIdeal& j) {
  if (!same_field(i.field(), j.field()) || i.nvars() != j.nvars() || !(i.order() == j.order()))
    throw std::invalid_argument("ideal operation across different rings");
}

}  // namespace

PolyIdeal ideal_sum(const PolyIdeal& i, const PolyIdeal& j) {
  check_same_ring(i, j);
  if (i.is_unit()) return i;
  if (j.is_unit()) return j;
  std::vector<MultiPoly> gens = i.basis();
  gens.insert(gens.end(), j.basis().begin(), j.basis().end());
  if (gens.empty()) return i;
  return PolyIdeal(std::move(gens), i.order());
}

PolyIdeal ideal_product(const PolyIdeal& i, const PolyIdeal& j) {
  check_same_ring(i, j);
  if (i.is_zero() || j.is_zero()) return zero_ideal(i.field(), i.nvars(), i.order());
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  std::vector<MultiPoly> gens;
  for (const auto& f : i.basis())
    for (const auto& g : j.basis()) gens.push_back(f * g);
  return PolyIdeal(std::move(gens), i.order());
}

PolyIdeal ideal_intersect(const PolyIdeal& i, const PolyIdeal& j) {
  check_same_ring(i, j);
  if (i.nvars() != 2) throw std::invalid_argument("ideal_intersect expects bivariate ideals");
  if (i.is_zero()) return i;
  if (j.is_zero()) return j;
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  if (i == j) return i;
  const MonomialOrder elim = MonomialOrder::elimination();
  const FieldPtr& k = i.field();
  const MultiPoly t = MultiPoly::variable(k, 3, elim, T);
  const MultiPoly one_minus_t = MultiPoly::constant(k, 3, elim, 1) - t;
  std::vector<MultiPoly> gens;
  for (const auto& f : i.basis()) gens.push_back(t * f.with_nvars(3, elim));
  for (const auto& g : j.basis()) gens.push_back(one_minus_t * g.with_nvars(3, elim));
  std::vector<MultiPoly> gb = buchberger(gens, elim);
  std::vector<MultiPoly> kept;
  for (const auto& g : gb)
    if (g.degree_in(T) == 0) kept.push_back(g.with_nvars(2, i.order()));
  if (kept.empty()) return zero_ideal(k, 2, i.order());
  return PolyIdeal(std::move(kept), i.order());
}

PolyIdeal ideal_colon(const PolyIdeal& i, const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  const MultiPoly g = f.with_order(i.order());
  if (i.contains(g)) return PolyIdeal::unit(i.field(), i.nvars(), i.order());
  const PolyIdeal principal({g}, i.order());
  const PolyIdeal meet = ideal_intersect(i, principal);
  if (meet.is_zero()) return meet;
  std::vector<MultiPoly> quotients;
  for (const auto& h : meet.basis()) quotients.push_back(exact_divide(h, g));
  return PolyIdeal(std::move(quotients), i.order());
}

PolyIdeal ideal_colon(const PolyIdeal& i, const PolyIdeal& j) {
  check_same_ring(i, j);
  if (j.is_zero()) throw std::invalid_argument("colon by the zero ideal");
  PolyIdeal result = PolyIdeal::unit(i.field(), i.nvars(), i.order());
  for (const auto& g : j.basis()) {
    result = ideal_intersect(result, ideal_colon(i, g));
    if (result == i) break;
  }
  return result;
}

std::vector<Monomial> standard_monomials(const PolyIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("the zero ideal has an infinite quotient");
  if (ideal.is_unit()) return {};
  std::array<std::uint32_t, kMaxVars> bound{1, 1, 1};
  for (int v = 0; v < ideal.nvars(); ++v) {
    std::uint32_t best = 0;
    for (const auto& g : ideal.basis()) {
      const Monomial& lm = g.leading_monomial();
      bool pure = true;
      for (int w = 0; w < kMaxVars; ++w)
        if (w != v && lm.exp[static_cast<std::size_t>(w)] != 0) pure = false;
      const std::uint32_t e = lm.exp[static_cast<std::size_t>(v)];
      if (pure && e > 0 && (best == 0 || e < best)) best = e;
    }
    if (best == 0) throw std::invalid_argument("ideal is not zero-dimensional");
    bound[static_cast<std::size_t>(v)] = best;
  }
  std::vector<Monomial> out;
  Monomial m;
  for (m.exp[2] = 0; m.exp[2] < bound[2]; ++m.exp[2])
    for (m.exp[1] = 0; m.exp[1] < bound[1]; ++m.exp[1])
      for (m.exp[0] = 0; m.exp[0] < bound[0]; ++m.exp[0]) {
        bool standard = true;
        for (const auto& g : ideal.basis())
          if (g.leading_monomial().divides(m)) {
            standard = false;
            break;
          }
        if (standard) out.push_back(m);
      }
  const MonomialOrder& order = ideal.order();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

std::size_t quotient_dimension(const PolyIdeal& ideal) { return standard_monomials(ideal).size(); }

MultiPoly minimal_polynomial(const PolyIdeal& ideal, int v) {
  const FieldPtr& field = ideal.field();
  const FiniteField& k = *field;
  if (v < 0 || v >= ideal.nvars()) throw std::invalid_argument("variable index out of range");
  if (ideal.is_unit()) return MultiPoly::constant(field, ideal.nvars(), ideal.order(), 1);
  const std::vector<Monomial> basis = standard_monomials(ideal);
  const std::size_t dim = basis.size();
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t n = 0; n < dim; ++n) index.emplace(basis[n], n);

  struct Row {
    std::vector<Coeff> vec;
    std::vector<Coeff> combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  const MultiPoly var = MultiPoly::variable(field, ideal.nvars(), ideal.order(), v);
  MultiPoly power = reduce(MultiPoly::constant(field, ideal.nvars(), ideal.order(), 1), ideal);
  for (std::size_t deg = 0; deg <= dim; ++deg) {
    std::vector<Coeff> vec(dim, 0);
    for (const auto& t : power.terms()) vec[index.at(t.mono)] = t.coeff;
    std::vector<Coeff> combo(dim + 1, 0);
    combo[deg] = 1;
    for (const Row& r : rows) {
      const Coeff c = vec[r.pivot];
      if (c == 0) continue;
      for (std::size_t n = 0; n < dim; ++n) vec[n] = k.sub(vec[n], k.mul(c, r.vec[n]));
      for (std::size_t n = 0; n <= dim; ++n) combo[n] = k.sub(combo[n], k.mul(c, r.combo[n]));
    }
    const auto nz = std::find_if(vec.begin(), vec.end(), [](Coeff c) { return c != 0; });
    if (nz == vec.end()) {
      std::vector<Term> terms;
      for (std::size_t n = 0; n <= deg; ++n)
        if (combo[n] != 0) terms.push_back({Monomial::var(v, static_cast<std::uint32_t>(n)), combo[n]});
      return MultiPoly::from_terms(field, ideal.nvars(), ideal.order(), std::move(terms)).monic();
    }
    const std::size_t pivot = static_cast<std::size_t>(nz - vec.begin());
    const Coeff inv = k.inv(vec[pivot]);
    for (auto& c : vec) c = k.mul(c, inv);
    for (auto& c : combo) c = k.mul(c, inv);
    rows.push_back({std::move(vec), std::move(combo), pivot});
    power = reduce(power * var, ideal);
  }
  throw InternalError("minimal polynomial search exceeded the quotient dimension");
}

PolyIdeal zerodim_radical(const PolyIdeal& ideal) {
  if (ideal.is_unit()) return ideal;
  std::vector<MultiPoly> gens = ideal.basis();
  bool changed = false;
  for (int v = 0; v < ideal.nvars(); ++v) {
    const MultiPoly m = minimal_polynomial(ideal, v);
    const MultiPoly s = squarefree_part(m);
    if (!(s == m)) changed = true;
    gens.push_back(s);
  }
  if (!changed) return ideal;
  return PolyIdeal(std::move(gens), ideal.order());
}

}  // namespace idealfact
