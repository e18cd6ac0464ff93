#pragma once

#include <random>
#include <string>
#include <vector>

#include "idealfact/curve_ring.hpp"

namespace idealfact {

struct PrimeFactor {
  RingIdeal prime;
  unsigned multiplicity;
  unsigned degree;
};
using Factorization = std::vector<PrimeFactor>;

/// Lex basis text of an ideal, generators joined by ", ".
std::string canonical_text(const RingIdeal& a);

/// Sorts by (degree, multiplicity, canonical text).
void sort_canonically(Factorization& f);

/// Product of p^k over the factors; the unit ideal for an empty list.
RingIdeal recombine(const RingPtr& ring, const Factorization& f);

/// [g_1, ..., g_m] with a = g_1 g_2^2 ... g_m^m. Entries may be R; g_m is not.
std::vector<RingIdeal> radical_decomposition(const RingIdeal& a);

/// [h_1, ..., h_m] where h_k is the intersection of the primes of degree k
/// dividing g. g must be radical; R gives the empty list.
std::vector<RingIdeal> distinct_degree(const RingIdeal& g);

enum class EdfSampling {
  /// Draw b and test c = b^((q^d - 1)/2) - 1 (odd q) or the absolute trace of
  /// b (even q). Succeeds with probability about 1/2 per draw.
  Mapped,
  /// Test the drawn b itself. Succeeds with probability about m/q^d.
  Direct,
};

struct EdfOptions {
  EdfSampling sampling = EdfSampling::Mapped;
  /// Draws allowed per split before ProbabilisticFailure; 0 picks the
  /// default (64 m for Mapped, 64 / P(split) for Direct, m = D/d).
  std::size_t max_draws = 0;
  /// Check that h is radical with all primes of degree exactly d first.
  bool verify_input = false;
};

/// Record of the randomized recursion, identical for identical seeds.
struct EdfTranscript {
  std::size_t draws = 0;
  std::vector<std::string> events;
};

/// Splits h (radical, every prime of degree d) into its primes. Pieces come
/// back in recursion order: the <c> + h branch before its complement.
std::vector<RingIdeal> equal_degree(const RingIdeal& h, unsigned d, std::mt19937_64& rng,
                                    const EdfOptions& options = {}, EdfTranscript* transcript = nullptr);

/// Intermediate results of factorize, for inspection.
struct FactorizeTrace {
  std::vector<RingIdeal> radical;
  /// ddf[j] is the distinct-degree split of radical[j] (empty when it is R).
  std::vector<std::vector<RingIdeal>> ddf;
  EdfTranscript edf;
};

/// Complete factorization, canonically sorted. a must be proper and nonzero.
Factorization factorize(const RingIdeal& a, std::mt19937_64& rng, const EdfOptions& options = {},
                        FactorizeTrace* trace = nullptr);

struct PrimeCheck {
  bool prime = false;
  unsigned degree = 0;
};

/// Decides primality via radicality, the residue count and Frobenius ideals.
PrimeCheck is_prime(const RingIdeal& a);

/// True iff h is radical and every prime dividing it has degree exactly d.
bool is_equal_degree(const RingIdeal& h, unsigned d);

}  // namespace idealfact
