#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "idealfact/curve_ring.hpp"
#include "idealfact/oracle.hpp"
#include "idealfact/poly_io.hpp"

namespace idealfact::fixtures {

using Gens = std::vector<std::string>;

// F_13, hyperelliptic curve.
namespace ex1 {
inline const char* kCurve = "y^2 - (x^5 - x)*(x^4 + 2)";
inline const Gens kIdeal{"x^9 + 8*x^7 + 5*x^6 + 10*x^5 + 6*x^4 + 4*x^3 + 9*x^2 + 6*x + 4",
                         "11*x^8 + 8*x^7 + 2*x^6 + 10*x^5 + 6*x^4 + x^3*y + x^3 + 4*x^2*y + 7*x^2 + 4*x*y + 9*y + 7"};
inline const Gens kG1{"x^6 + 9*x^5 + 7*x^4 + 10*x^3 + 4*x^2 + 4*x + 12", "y + 12*x^5 + x^4 + 11*x^3 + 10*x^2 + 3*x + 8"};
inline const Gens kG2{"x^3 + 4*x^2 + 4*x + 9", "y + 7*x^2 + 9*x + 12"};
inline const Gens kH13{"8*x^5*y + 5*x^4*y + 9*x^3*y + x*y + 5*y + 1",
                       "x^6*y + 9*x^5*y + 7*x^4*y + 10*x^3*y + 4*x^2*y + 4*x*y + 12*y"};
inline const Gens kH23{"5*x^2*y + 5*x*y + 6*y + 1", "x^3*y + 4*x^2*y + 4*x*y + 9*y"};
inline const Gens kP1{"x^3 + 4*x^2 + 4*x + 9", "y + 6*x^2 + 4*x + 1"};
inline const Gens kP2{"x^3 + 5*x^2 + 9*x + 10", "y + 3*x^2 + 7*x + 4"};
inline const Gens kP3{"x^3 + 4*x^2 + 4*x + 9", "y + 7*x^2 + 9*x + 12"};
}  // namespace ex1

// F_19, elliptic curve y^2 + y = x^3 - 2x^2 + 1.
namespace ex2 {
inline const char* kCurve = "y^2 + y - (x^3 - 2*x^2 + 1)";
inline const Gens kIdeal{
    "x^21 + 14*x^20 + 9*x^19 + 4*x^18 + 5*x^17 + 12*x^16 + 9*x^15 + 7*x^14 + 12*x^13 + 8*x^12 + 3*x^11 + 8*x^10 + "
    "14*x^9 + 7*x^8 + 12*x^7 + x^6 + 9*x^5 + 13*x^4 + 9*x^3 + 4*x^2 + 18*x + 4",
    "x^3*y + 6*x^2*y + 3*x*y + 17*y + 7*x^18 + 7*x^17 + 11*x^16 + x^15 + 18*x^13 + 8*x^12 + 9*x^11 + 15*x^10 + "
    "13*x^9 + 18*x^8 + 12*x^7 + x^6 + 14*x^5 + 10*x^4 + 7*x^3 + 15*x^2 + 9*x + 5"};
inline const Gens kG1{"x^3 + 6*x^2 + 3*x + 17", "x^3*y + 6*x^2*y + 3*x*y + 17*y"};
inline const Gens kG2{"x^3 + 4*x + 17", "y + 8*x^2 + 2*x + 9"};
inline const Gens kG4{"x^3 + 2*x^2 + 10*x + 4", "y + 8*x^2 + 3*x"};
inline const Gens kH12{"x + 1"};
inline const Gens kH14{"x^2 + 5*x + 17"};
inline const Gens kH23{"x^3 + 4*x + 17", "y + 8*x^2 + 2*x + 9"};
inline const Gens kH43{"x^3 + 2*x^2 + 10*x + 4", "y + 8*x^2 + 3*x"};
}  // namespace ex2

// Smooth curves with primes of every degree up to 3.
struct SmallCurve {
  std::uint32_t q;
  const char* curve;
};
inline const SmallCurve kSmallCurves[] = {
    {2, "y^2 + x*y + x^3 + x^2 + 1"},  // 1, 3, 4 primes of degree 1, 2, 3
    {3, "y^2 - x^3 - x^2 - 1"},        // 5, 3, 4
    {5, "y^2 - x^3 - x - 1"},          // 8, 9, 33
};

inline RingPtr ring(std::uint32_t p, const char* curve) {
  return CurveRing::make(parse_poly(curve, FiniteField::prime(p)));
}

inline RingIdeal make(const RingPtr& R, const Gens& gens) {
  std::vector<MultiPoly> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, R->field(), 2, R->order()));
  return RingIdeal::make(R, g);
}

inline std::vector<RingIdeal> primes_only(const std::vector<OraclePrime>& ps) {
  std::vector<RingIdeal> out;
  for (const auto& p : ps) out.push_back(p.prime);
  return out;
}

/// Up to max_factors distinct primes drawn from `pool` with multiplicities
/// in [1, max_mult], canonically sorted. The product is recombine(ring, f).
inline Factorization random_factorization(const std::vector<OraclePrime>& pool, std::mt19937_64& rng,
                                          unsigned max_factors = 4, unsigned max_mult = 3) {
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  const std::size_t n = 1 + rng() % std::min<std::size_t>(max_factors, pool.size());
  Factorization f;
  for (std::size_t i = 0; i < n; ++i)
    f.push_back({pool[idx[i]].prime, static_cast<unsigned>(1 + rng() % max_mult), pool[idx[i]].degree});
  sort_canonically(f);
  return f;
}

inline bool same_factorization(const Factorization& a, const Factorization& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].prime == b[i].prime) || a[i].multiplicity != b[i].multiplicity || a[i].degree != b[i].degree)
      return false;
  return true;
}

}  // namespace idealfact::fixtures
