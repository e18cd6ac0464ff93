#include "idealfact/oracle.hpp"

#include <stdexcept>
#include <unordered_set>

#include "idealfact/errors.hpp"

namespace idealfact {

namespace {

using Point = std::pair<Coeff, Coeff>;

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

void check_scale(const RingPtr& ring, unsigned max_degree) {
  const auto& k = *ring->field();
  if (!k.is_prime_field()) throw std::invalid_argument("oracle: only prime fields are supported");
  if (max_degree < 1 || max_degree > 4) throw std::invalid_argument("oracle: degree bound must be between 1 and 4");
  if (ipow(k.order(), max_degree) > kOracleScale)
    throw std::invalid_argument("oracle: q^" + std::to_string(max_degree) + " exceeds the supported scale");
}

FieldPtr extension_of(const RingPtr& ring, unsigned d) {
  const std::uint32_t p = ring->field()->characteristic();
  return d == 1 ? FiniteField::prime(p) : FiniteField::extension(p, d);
}

// Value of f (coefficients in F_p, embedded as digit-0 codes) at (x0, y0).
Coeff evaluate(const MultiPoly& f, const FiniteField& K, Coeff x0, Coeff y0) {
  Coeff acc = 0;
  for (const auto& t : f.terms())
    acc = K.add(acc, K.mul(t.coeff, K.mul(K.pow(x0, t.mono.exp[X]), K.pow(y0, t.mono.exp[Y]))));
  return acc;
}

// All affine points over K. F is grouped by powers of y so each x0 costs one
// pass over F and each y0 one Horner evaluation.
std::vector<Point> curve_points(const MultiPoly& F, const FiniteField& K) {
  const std::uint32_t dy = F.degree_in(Y);
  std::vector<Point> out;
  std::vector<Coeff> c(dy + 1);
  for (Coeff x0 = 0; x0 < K.order(); ++x0) {
    std::fill(c.begin(), c.end(), 0);
    for (const auto& t : F.terms())
      c[t.mono.exp[Y]] = K.add(c[t.mono.exp[Y]], K.mul(t.coeff, K.pow(x0, t.mono.exp[X])));
    for (Coeff y0 = 0; y0 < K.order(); ++y0) {
      Coeff v = 0;
      for (std::uint32_t j = dy + 1; j-- > 0;) v = K.add(K.mul(v, y0), c[j]);
      if (v == 0) out.emplace_back(x0, y0);
    }
  }
  return out;
}

struct PointHash {
  std::size_t operator()(const Point& p) const { return (static_cast<std::size_t>(p.first) << 20) ^ p.second; }
};

// Kernel over F_p of the evaluation map at a point of F_{p^d}, on monomials
// of total degree <= bound, saturated with Buchberger.
PolyIdeal vanishing_ideal(const RingPtr& ring, const FiniteField& K, Point pt, std::uint32_t bound) {
  const FieldPtr& k = ring->field();
  const FiniteField& Fp = *k;
  const unsigned d = K.degree();
  std::vector<Monomial> monos;
  for (std::uint32_t total = 0; total <= bound; ++total)
    for (std::uint32_t i = 0; i <= total; ++i) monos.push_back(Monomial{{i, total - i, 0}});
  const std::size_t n = monos.size();
  // Columns are monomials; rows are the d base-p digits of the value.
  std::vector<std::vector<Coeff>> rows(d, std::vector<Coeff>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const Coeff v = K.mul(K.pow(pt.first, monos[j].exp[X]), K.pow(pt.second, monos[j].exp[Y]));
    const auto dig = K.digits(v);
    for (unsigned i = 0; i < d; ++i) rows[i][j] = dig[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < d; ++col) {
    std::size_t sel = r;
    while (sel < d && rows[sel][col] == 0) ++sel;
    if (sel == d) continue;
    std::swap(rows[r], rows[sel]);
    const Coeff inv = Fp.inv(rows[r][col]);
    for (auto& c : rows[r]) c = Fp.mul(c, inv);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Coeff f = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = Fp.sub(rows[i][j], Fp.mul(f, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  std::vector<MultiPoly> gens;
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Term> terms{{monos[free], 1}};
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i][free] != 0) terms.push_back({monos[pivots[i]], Fp.neg(rows[i][free])});
    gens.push_back(MultiPoly::from_terms(k, 2, ring->order(), std::move(terms)));
  }
  return PolyIdeal(std::move(gens), ring->order());
}

RingIdeal prime_of_orbit(const RingPtr& ring, const FiniteField& K, Point pt) {
  const std::uint32_t d = K.degree();
  std::uint32_t bound = d + ring->curve().total_degree();
  for (int attempt = 0; attempt < 2; ++attempt, bound *= 2) {
    PolyIdeal p = vanishing_ideal(ring, K, pt, bound);
    if (p.contains(ring->curve()) && quotient_dimension(p) == d) return RingIdeal::from_contraction(ring, std::move(p));
  }
  throw InternalError("oracle: vanishing ideal of a degree-" + std::to_string(d) +
                      " orbit did not reach the expected dimension");
}

std::vector<OraclePrime> enumerate(const RingPtr& ring, unsigned max_degree, const std::vector<MultiPoly>* filter) {
  check_scale(ring, max_degree);
  const std::uint32_t q = ring->field()->order();
  std::vector<OraclePrime> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    const FieldPtr K = extension_of(ring, d);
    std::unordered_set<Point, PointHash> seen;
    for (const Point& pt : curve_points(ring->curve(), *K)) {
      if (seen.count(pt)) continue;
      unsigned size = 0;
      Point cur = pt;
      do {
        seen.insert(cur);
        cur = {K->pow(cur.first, q), K->pow(cur.second, q)};
        ++size;
      } while (cur != pt);
      if (size != d) continue;
      if (filter) {
        bool vanishes = true;
        for (const auto& g : *filter)
          if (evaluate(g, *K, pt.first, pt.second) != 0) vanishes = false;
        if (!vanishes) continue;
      }
      out.push_back({prime_of_orbit(ring, *K, pt), d});
    }
  }
  return out;
}

}  // namespace

std::uint64_t count_points(const RingPtr& ring, unsigned k) {
  check_scale(ring, k);
  return curve_points(ring->curve(), *extension_of(ring, k)).size();
}

std::vector<OraclePrime> enumerate_primes(const RingPtr& ring, unsigned max_degree) {
  return enumerate(ring, max_degree, nullptr);
}

std::vector<OraclePrime> enumerate_primes_containing(const RingIdeal& a, unsigned max_degree) {
  require_nonzero(a, "oracle");
  return enumerate(a.ring(), max_degree, &a.contraction().basis());
}

unsigned valuation(const RingIdeal& a, const RingIdeal& p) {
  require_nonzero(a, "valuation");
  if (p.is_unit()) throw std::invalid_argument("valuation: the unit ideal is not a prime");
  unsigned e = 0;
  RingIdeal power = p;
  while (power.contains(a)) {
    ++e;
    power = r_product(power, p);
  }
  return e;
}

Factorization oracle_factor(const RingIdeal& a, unsigned max_degree) {
  require_nonzero(a, "oracle");
  Factorization out;
  std::size_t accounted = 0;
  for (auto& [p, d] : enumerate_primes_containing(a, max_degree)) {
    const unsigned k = valuation(a, p);
    if (k == 0) throw InternalError("oracle: a prime containing the ideal has valuation 0");
    accounted += static_cast<std::size_t>(k) * d;
    out.push_back({std::move(p), k, d});
  }
  if (accounted != a.dimension())
    throw InternalError("oracle: primes of degree <= " + std::to_string(max_degree) + " account for dimension " +
                        std::to_string(accounted) + " of " + std::to_string(a.dimension()));
  sort_canonically(out);
  return out;
}

}  // namespace idealfact
