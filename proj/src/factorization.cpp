#include "idealfact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "idealfact/errors.hpp"
#include "idealfact/poly_io.hpp"

namespace idealfact {

namespace {

void require_proper(const RingIdeal& a, const char* stage) {
  require_nonzero(a, stage);
  if (a.is_unit()) throw std::invalid_argument(std::string(stage) + ": the unit ideal has no factorization");
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

MultiPoly one_mod(const RingIdeal& h) {
  return residue(h, MultiPoly::constant(h.ring()->field(), 2, h.ring()->order(), 1));
}

// The element whose zero-divisor status decides a split.
MultiPoly split_candidate(const RingIdeal& h, const MultiPoly& b, unsigned d, EdfSampling sampling) {
  if (sampling == EdfSampling::Direct) return b;
  const FiniteField& k = *h.ring()->field();
  const std::uint32_t q = k.order();
  if (q % 2 == 1) return residue(h, residue_pow(h, residue_norm(h, b, d), (q - 1) / 2) - one_mod(h));
  // Absolute trace down to F_2: b + b^2 + b^4 + ... with l*d terms.
  MultiPoly t = b, sum = b;
  for (unsigned i = 1; i < k.degree() * d; ++i) {
    t = residue_pow(h, t, 2);
    sum = residue(h, sum + t);
  }
  return sum;
}

// c is a zero divisor of R/h other than 0: c != 0 and c^(q^d - 1) != 1.
bool is_proper_zero_divisor(const RingIdeal& h, const MultiPoly& c, unsigned d) {
  if (c.is_zero()) return false;
  const std::uint32_t q = h.ring()->field()->order();
  return !(residue_pow(h, residue_norm(h, c, d), q - 1) == one_mod(h));
}

std::size_t draw_cap(const RingIdeal& h, std::size_t m, unsigned d, const EdfOptions& options) {
  if (options.max_draws) return options.max_draws;
  if (options.sampling == EdfSampling::Mapped) return 64 * m;
  // b vanishes in a given component with probability q^-d.
  const double hit = std::pow(static_cast<double>(h.ring()->field()->order()), -static_cast<double>(d));
  const double p = -std::expm1(static_cast<double>(m) * std::log1p(-hit));
  return static_cast<std::size_t>(std::ceil(64.0 / p));
}

void edf_recurse(const RingIdeal& h, unsigned d, std::mt19937_64& rng, const EdfOptions& options,
                 EdfTranscript& log, std::vector<RingIdeal>& out) {
  const std::size_t D = h.dimension();
  if (D % d != 0)
    throw InternalError("equal-degree: residue dimension " + std::to_string(D) + " is not a multiple of " +
                        std::to_string(d));
  if (D == d) {
    log.events.push_back("prime D=" + std::to_string(D));
    out.push_back(h);
    return;
  }
  const std::size_t m = D / d;
  const std::size_t cap = draw_cap(h, m, d, options);
  for (std::size_t n = 1; n <= cap; ++n) {
    ++log.draws;
    const MultiPoly b = random_element(h, rng);
    const MultiPoly c = split_candidate(h, b, d, options.sampling);
    if (!is_proper_zero_divisor(h, c, d)) continue;
    const RingIdeal left = r_sum(h, RingIdeal::make(h.ring(), {c}));
    const RingIdeal right = r_colon(h, left);
    log.events.push_back("split D=" + std::to_string(D) + " draws=" + std::to_string(n) + " -> " +
                         std::to_string(left.dimension()) + "+" + std::to_string(right.dimension()));
    edf_recurse(left, d, rng, options, log, out);
    edf_recurse(right, d, rng, options, log, out);
    return;
  }
  throw ProbabilisticFailure("equal-degree: no splitting element after " + std::to_string(cap) +
                             " draws (residue dimension " + std::to_string(D) + ", degree " + std::to_string(d) + ")");
}

}  // namespace

std::string canonical_text(const RingIdeal& a) {
  std::string s;
  for (const auto& g : a.canonical_basis()) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  return s;
}

void sort_canonically(Factorization& f) {
  std::vector<std::pair<std::string, PrimeFactor>> keyed;
  for (auto& p : f) keyed.emplace_back(canonical_text(p.prime), std::move(p));
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.degree != b.second.degree) return a.second.degree < b.second.degree;
    if (a.second.multiplicity != b.second.multiplicity) return a.second.multiplicity < b.second.multiplicity;
    return a.first < b.first;
  });
  f.clear();
  for (auto& k : keyed) f.push_back(std::move(k.second));
}

RingIdeal recombine(const RingPtr& ring, const Factorization& f) {
  RingIdeal out = RingIdeal::unit(ring);
  for (const auto& p : f) out = r_product(out, r_power(p.prime, p.multiplicity));
  return out;
}

std::vector<RingIdeal> radical_decomposition(const RingIdeal& a) {
  require_proper(a, "radical decomposition");
  RingIdeal b = r_radical(a);
  RingIdeal rest = r_colon(a, b);
  std::vector<RingIdeal> g;
  while (!b.is_unit()) {
    RingIdeal b_next = r_sum(rest, b);
    RingIdeal rest_next = r_colon(rest, b_next);
    g.push_back(r_colon(b, b_next));
    b = std::move(b_next);
    rest = std::move(rest_next);
  }
  return g;
}

std::vector<RingIdeal> distinct_degree(const RingIdeal& g) {
  require_nonzero(g, "distinct-degree");
  if (!(r_radical(g) == g)) throw std::invalid_argument("distinct-degree: input ideal is not radical");
  std::vector<RingIdeal> h;
  RingIdeal a = g;
  for (unsigned k = 1; !a.is_unit(); ++k) {
    RingIdeal hk = frobenius_ideal(a.ring(), k, a);
    a = r_colon(a, hk);
    h.push_back(std::move(hk));
  }
  return h;
}

bool is_equal_degree(const RingIdeal& h, unsigned d) {
  if (d == 0 || h.is_zero() || !(r_radical(h) == h)) return false;
  if (h.is_unit()) return true;
  if (h.dimension() % d != 0) return false;
  if (!(frobenius_ideal(h.ring(), d, h) == h)) return false;
  for (unsigned p : prime_divisors(d))
    if (!frobenius_ideal(h.ring(), d / p, h).is_unit()) return false;
  return true;
}

std::vector<RingIdeal> equal_degree(const RingIdeal& h, unsigned d, std::mt19937_64& rng, const EdfOptions& options,
                                    EdfTranscript* transcript) {
  if (d == 0) throw std::invalid_argument("equal-degree: degree must be positive");
  require_nonzero(h, "equal-degree");
  if (h.is_unit()) return {};
  if (options.verify_input && !is_equal_degree(h, d))
    throw std::invalid_argument("equal-degree: input is not a radical ideal whose primes all have degree " +
                                std::to_string(d));
  EdfTranscript local;
  std::vector<RingIdeal> out;
  edf_recurse(h, d, rng, options, transcript ? *transcript : local, out);
  return out;
}

Factorization factorize(const RingIdeal& a, std::mt19937_64& rng, const EdfOptions& options, FactorizeTrace* trace) {
  require_proper(a, "factorization");
  FactorizeTrace local;
  FactorizeTrace& tr = trace ? *trace : local;
  tr.radical = radical_decomposition(a);
  tr.ddf.assign(tr.radical.size(), {});
  Factorization out;
  for (std::size_t j = 0; j < tr.radical.size(); ++j) {
    if (tr.radical[j].is_unit()) continue;
    tr.ddf[j] = distinct_degree(tr.radical[j]);
    for (std::size_t k = 0; k < tr.ddf[j].size(); ++k) {
      if (tr.ddf[j][k].is_unit()) continue;
      const unsigned d = static_cast<unsigned>(k + 1);
      for (auto& p : equal_degree(tr.ddf[j][k], d, rng, options, &tr.edf))
        out.push_back({std::move(p), static_cast<unsigned>(j + 1), d});
    }
  }
  sort_canonically(out);
  return out;
}

PrimeCheck is_prime(const RingIdeal& a) {
  require_proper(a, "primality test");
  if (!(r_radical(a) == a)) return {};
  const auto d = static_cast<unsigned>(a.dimension());
  if (!(frobenius_ideal(a.ring(), d, a) == a)) return {};
  for (unsigned p : prime_divisors(d))
    if (!frobenius_ideal(a.ring(), d / p, a).is_unit()) return {};
  return {true, d};
}

}  // namespace idealfact
