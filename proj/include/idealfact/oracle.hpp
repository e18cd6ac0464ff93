#pragma once

#include <cstdint>
#include <vector>

#include "idealfact/factorization.hpp"

namespace idealfact {

/// Brute-force ground truth for small prime fields: primes of R of degree d
/// correspond to Frobenius orbits of size d among the points of the curve
/// over F_{q^d}.

struct OraclePrime {
  RingIdeal prime;
  unsigned degree;
};

/// Largest q^max_degree the oracle accepts.
inline constexpr std::uint64_t kOracleScale = 10000;

/// Affine points of the curve over F_{q^k}.
std::uint64_t count_points(const RingPtr& ring, unsigned k);

/// All primes of degree <= max_degree, ordered by degree then by the first
/// point of each orbit.
std::vector<OraclePrime> enumerate_primes(const RingPtr& ring, unsigned max_degree);

/// Only the primes containing a (those whose orbit lies on the zero set of a).
std::vector<OraclePrime> enumerate_primes_containing(const RingIdeal& a, unsigned max_degree);

/// max e with a ⊆ p^e.
unsigned valuation(const RingIdeal& a, const RingIdeal& p);

/// Factorization of a over primes of degree <= max_degree, canonically
/// sorted. Throws InternalError if the primes found do not account for all
/// of |R/a|.
Factorization oracle_factor(const RingIdeal& a, unsigned max_degree);

}  // namespace idealfact
