#include "idealfact/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealfact/errors.hpp"

namespace idealfact {

std::string MonomialOrder::name() const {
  static constexpr const char* kNames[] = {"x", "y", "t"};
  std::string s = kind_ == OrderKind::Lex ? "lex" : kind_ == OrderKind::Grevlex ? "grevlex" : "elim";
  s += '(';
  for (std::size_t k = 0; k < precedence_.size(); ++k) {
    if (k) s += " > ";
    s += kNames[precedence_[k]];
  }
  return s + ')';
}

MultiPoly::MultiPoly(FieldPtr field, int nvars, MonomialOrder order)
    : field_(std::move(field)), nvars_(nvars), order_(order) {
  if (!field_) throw std::invalid_argument("polynomial without a field");
  if (nvars_ < 1 || nvars_ > kMaxVars) throw std::invalid_argument("polynomials support 1 to 3 variables");
}

MultiPoly MultiPoly::constant(FieldPtr field, int nvars, MonomialOrder order, Coeff c) {
  return monomial(std::move(field), nvars, order, c, Monomial{});
}

MultiPoly MultiPoly::variable(FieldPtr field, int nvars, MonomialOrder order, int v) {
  if (v < 0 || v >= nvars) throw std::invalid_argument("variable index out of range");
  return monomial(std::move(field), nvars, order, 1, Monomial::var(v));
}

MultiPoly MultiPoly::monomial(FieldPtr field, int nvars, MonomialOrder order, Coeff c, const Monomial& m) {
  MultiPoly r(std::move(field), nvars, order);
  for (int v = nvars; v < kMaxVars; ++v)
    if (m.exp[static_cast<std::size_t>(v)] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
  if (c >= r.field_->order()) throw std::invalid_argument("coefficient code out of range");
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

MultiPoly MultiPoly::from_terms(FieldPtr field, int nvars, MonomialOrder order, std::vector<Term> terms) {
  MultiPoly r(std::move(field), nvars, order);
  for (const auto& t : terms) {
    for (int v = nvars; v < kMaxVars; ++v)
      if (t.mono.exp[static_cast<std::size_t>(v)] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    if (t.coeff >= r.field_->order()) throw std::invalid_argument("coefficient code out of range");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  const FiniteField& k = *r.field_;
  for (const auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = k.add(r.terms_.back().coeff, t.coeff);
    } else {
      if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
      r.terms_.push_back(t);
    }
  }
  if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
  return r;
}

MultiPoly MultiPoly::from_sorted_terms(FieldPtr field, int nvars, MonomialOrder order, std::vector<Term> terms) {
  MultiPoly r(std::move(field), nvars, order);
  r.terms_ = std::move(terms);
  return r;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(int v) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exp[static_cast<std::size_t>(v)]);
  return d;
}

bool MultiPoly::is_univariate_in(int v) const {
  for (const auto& t : terms_)
    for (int w = 0; w < kMaxVars; ++w)
      if (w != v && t.mono.exp[static_cast<std::size_t>(w)] != 0) return false;
  return true;
}

Coeff MultiPoly::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (!same_field(field_, o.field_)) throw std::invalid_argument("mismatched polynomial rings: different fields");
  if (nvars_ != o.nvars_) throw std::invalid_argument("mismatched polynomial rings: different variable counts");
  if (!(order_ == o.order_)) throw std::invalid_argument("mismatched polynomial rings: different monomial orders");
}

namespace {

// a + sign * b by merging two decreasing term lists.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, bool subtract, const FiniteField& k,
                        const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      const Coeff s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? k.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(o);
  return from_sorted_terms(field_, nvars_, order_, merge(terms_, o.terms_, false, *field_, order_));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_compatible(o);
  return from_sorted_terms(field_, nvars_, order_, merge(terms_, o.terms_, true, *field_, order_));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_->neg(t.coeff);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(o);
  if (is_zero() || o.is_zero()) return MultiPoly(field_, nvars_, order_);
  // Accumulate one shifted copy of the longer factor per term of the shorter.
  const MultiPoly& small = size() <= o.size() ? *this : o;
  const MultiPoly& large = size() <= o.size() ? o : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& u : large.terms_) row.push_back({t.mono * u.mono, field_->mul(t.coeff, u.coeff)});
    acc = merge(acc, row, false, *field_, order_);
  }
  return from_sorted_terms(field_, nvars_, order_, std::move(acc));
}

MultiPoly MultiPoly::scaled(Coeff c) const {
  if (c == 0) return MultiPoly(field_, nvars_, order_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = field_->mul(t.coeff, c);
  return r;
}

MultiPoly MultiPoly::times_term(Coeff c, const Monomial& m) const {
  if (c == 0) return MultiPoly(field_, nvars_, order_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff = field_->mul(t.coeff, c);
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading_coeff()));
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
  MultiPoly result = constant(field_, nvars_, order_, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int v) const {
  if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
  std::vector<Term> out;
  const auto i = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    if (t.mono.exp[i] == 0) continue;
    const Coeff c = field_->mul(t.coeff, field_->from_integer(t.mono.exp[i]));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.exp[i] -= 1;
    out.push_back({m, c});
  }
  // Differentiation by one variable is injective on the surviving terms and
  // preserves any monomial order.
  return from_sorted_terms(field_, nvars_, order_, std::move(out));
}

MultiPoly MultiPoly::with_order(const MonomialOrder& order) const {
  if (order == order_) return *this;
  std::vector<Term> t = terms_;
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return from_sorted_terms(field_, nvars_, order, std::move(t));
}

MultiPoly MultiPoly::with_nvars(int nvars, const MonomialOrder& order) const {
  if (nvars < nvars_) {
    for (const auto& t : terms_)
      for (int v = nvars; v < kMaxVars; ++v)
        if (t.mono.exp[static_cast<std::size_t>(v)] != 0)
          throw std::invalid_argument("cannot drop a variable the polynomial uses");
  }
  MultiPoly r = with_order(order);
  MultiPoly out(field_, nvars, order);
  out.terms_ = std::move(r.terms_);
  return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return same_field(field_, o.field_) && nvars_ == o.nvars_ && order_ == o.order_ && terms_ == o.terms_;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  const FiniteField& k = *f.field();
  const Coeff inv_lc = k.inv(g.leading_coeff());
  MultiPoly rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!g.leading_monomial().divides(lm)) throw InternalError("exact division failed: remainder is nonzero");
    const Term t{lm / g.leading_monomial(), k.mul(rem.leading_coeff(), inv_lc)};
    quotient.push_back(t);
    rem = rem - g.times_term(t.coeff, t.mono);
  }
  return MultiPoly::from_sorted_terms(f.field(), f.nvars(), f.order(), std::move(quotient));
}

}  // namespace idealfact
