#include "idealfact/univariate.hpp"

#include <stdexcept>

namespace idealfact {

UniPoly::UniPoly(FieldPtr field, std::vector<Coeff> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Coeff> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  std::vector<Coeff> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  return UniPoly(field_, std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::domain_error("univariate division by zero");
  std::vector<Coeff> rem = c_;
  if (rem.size() < d.c_.size()) return {UniPoly(field_), *this};
  std::vector<Coeff> quo(rem.size() - d.c_.size() + 1, 0);
  const Coeff inv = field_->inv(d.leading_coeff());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Coeff c = field_->mul(rem[k + d.c_.size() - 1], inv);
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = field_->sub(rem[k + j], field_->mul(c, d.c_[j]));
  }
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Coeff inv = field_->inv(leading_coeff());
  std::vector<Coeff> r = c_;
  for (auto& c : r) c = field_->mul(c, inv);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly(field_);
  std::vector<Coeff> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_->mul(c_[i], field_->from_integer(static_cast<std::int64_t>(i)));
  return UniPoly(field_, std::move(r));
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// f = h(x^p) with f' = 0: returns h with coefficients mapped through the
// inverse Frobenius, so that h^p = f.
UniPoly pth_root(const UniPoly& f) {
  const FiniteField& k = *f.field();
  const std::uint32_t p = k.characteristic();
  std::vector<Coeff> r(f.coeffs().size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r[i / p] = k.frobenius_inverse(f.coeffs()[i]);
  return UniPoly(f.field(), std::move(r));
}

}  // namespace

UniPoly squarefree_part(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  const UniPoly one(f.field(), {1});
  if (f.degree() == 0) return one;
  const UniPoly fm = f.monic();
  const UniPoly df = fm.derivative();
  if (df.is_zero()) return squarefree_part(pth_root(fm));
  UniPoly g = gcd(fm, df);
  // w collects each irreducible factor whose multiplicity is prime to p.
  const UniPoly w = fm.divmod(g).first.monic();
  for (;;) {
    const UniPoly c = gcd(g, w);
    if (c.degree() == 0) break;
    g = g.divmod(c).first;
  }
  // What is left of g is a p-th power.
  if (g.degree() <= 0) return w;
  return (w * squarefree_part(pth_root(g.monic()))).monic();
}

std::optional<int> common_variable(const MultiPoly& f, const MultiPoly& g) {
  std::optional<int> var;
  for (const MultiPoly* h : {&f, &g}) {
    for (const auto& t : h->terms()) {
      for (int v = 0; v < kMaxVars; ++v) {
        if (t.mono.exp[static_cast<std::size_t>(v)] == 0) continue;
        if (var && *var != v) return std::nullopt;
        var = v;
      }
    }
  }
  return var.value_or(X);
}

UniPoly to_univariate(const MultiPoly& f, int v) {
  if (!f.is_univariate_in(v)) throw std::invalid_argument("polynomial is not univariate");
  std::vector<Coeff> c(f.degree_in(v) + 1, 0);
  for (const auto& t : f.terms()) c[t.mono.exp[static_cast<std::size_t>(v)]] = t.coeff;
  return UniPoly(f.field(), std::move(c));
}

MultiPoly from_univariate(const UniPoly& f, int v, int nvars, const MonomialOrder& order) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i] != 0) terms.push_back({Monomial::var(v, static_cast<std::uint32_t>(i)), f.coeffs()[i]});
  return MultiPoly::from_terms(f.field(), nvars, order, std::move(terms));
}

MultiPoly univar_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (!same_field(f.field(), g.field()) || f.nvars() != g.nvars())
    throw std::invalid_argument("mismatched polynomial rings");
  const auto v = common_variable(f, g);
  if (!v) throw std::invalid_argument("univar_gcd: inputs are not univariate in a common variable");
  return from_univariate(gcd(to_univariate(f, *v), to_univariate(g, *v)), *v, f.nvars(), f.order());
}

MultiPoly squarefree_part(const MultiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree part of the zero polynomial");
  const auto v = common_variable(f, f);
  if (!v) throw std::invalid_argument("squarefree_part: input is not univariate");
  return from_univariate(squarefree_part(to_univariate(f, *v)), *v, f.nvars(), f.order());
}

}  // namespace idealfact
