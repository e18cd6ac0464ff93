#include <cmath>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "idealfact/errors.hpp"
#include "idealfact/oracle.hpp"

using namespace idealfact;
using namespace idealfact::fixtures;

TEST_CASE("degree-2 prime over x = -1 on the F_19 elliptic curve") {
  const auto R = ring(19, ex2::kCurve);
  const auto target = make(R, ex2::kH12);
  int hits = 0;
  for (const auto& [p, d] : enumerate_primes(R, 2))
    if (p == target) {
      ++hits;
      CHECK(d == 2);
    }
  CHECK(hits == 1);
}

TEST_CASE("point counts by direct search") {
  const auto R = ring(2, "y^2 + y + x^3 + x + 1");
  CHECK(count_points(R, 1) == 0);
  CHECK(enumerate_primes(R, 1).empty());
  // Hasse bound |N + 1 - q^k - 1| <= 2 sqrt(q^k) for these genus-1 curves.
  for (const auto& sc : kSmallCurves) {
    const auto C = ring(sc.q, sc.curve);
    for (unsigned k = 1; k <= 3; ++k) {
      double qk = 1;
      for (unsigned i = 0; i < k; ++i) qk *= sc.q;
      const double n = static_cast<double>(count_points(C, k)) + 1;
      CHECK(std::abs(n - qk - 1) <= 2 * std::sqrt(qk));
    }
  }
}

TEST_CASE("prime counts match point counts") {
  for (const auto& sc : kSmallCurves) {
    const auto R = ring(sc.q, sc.curve);
    const auto primes = enumerate_primes(R, 3);
    for (unsigned k = 1; k <= 3; ++k) {
      std::uint64_t total = 0;
      for (const auto& [p, d] : primes)
        if (k % d == 0) total += d;
      CHECK(total == count_points(R, k));
    }
  }
}

TEST_CASE("enumerated primes are prime of the stated degree and distinct") {
  for (const auto& sc : kSmallCurves) {
    const auto R = ring(sc.q, sc.curve);
    const auto primes = enumerate_primes(R, sc.q == 5 ? 2 : 3);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto check = is_prime(primes[i].prime);
      CHECK(check.prime);
      CHECK(check.degree == primes[i].degree);
      for (std::size_t j = 0; j < i; ++j) CHECK(r_sum(primes[i].prime, primes[j].prime).is_unit());
    }
  }
}

TEST_CASE("oracle factorization round trip") {
  const auto R = ring(3, kSmallCurves[1].curve);
  const auto pool = enumerate_primes(R, 3);
  REQUIRE(pool.size() >= 2);
  const auto& p = pool.front();
  const auto& q = pool.back();
  Factorization expect{{p.prime, 1, p.degree}, {q.prime, 2, q.degree}};
  sort_canonically(expect);
  CHECK(same_factorization(oracle_factor(recombine(R, expect), 3), expect));
  CHECK(same_factorization(oracle_factor(p.prime, 3), Factorization{{p.prime, 1, p.degree}}));
  std::mt19937_64 rng(4);
  for (int n = 0; n < 20; ++n) {
    const auto f = random_factorization(pool, rng);
    CHECK(same_factorization(oracle_factor(recombine(R, f), 3), f));
  }
}

TEST_CASE("oracle on the F_13 example") {
  const auto R = ring(13, ex1::kCurve);
  const auto a = make(R, ex1::kIdeal);
  const auto f = oracle_factor(a, 3);
  REQUIRE(f.size() == 3);
  Factorization expect{{make(R, ex1::kP1), 1, 3}, {make(R, ex1::kP2), 1, 3}, {make(R, ex1::kP3), 2, 3}};
  sort_canonically(expect);
  CHECK(same_factorization(f, expect));
  CHECK_THROWS_AS(oracle_factor(a, 2), InternalError);
}

TEST_CASE("oracle preconditions") {
  const auto R = ring(13, ex1::kCurve);
  CHECK_THROWS_AS(enumerate_primes(R, 4), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_primes(R, 0), std::invalid_argument);
  const auto f4 = FiniteField::extension(2, 2);
  CHECK_THROWS_AS(enumerate_primes(CurveRing::make(parse_poly("y^2 + y + x^3", f4)), 1), std::invalid_argument);
  CHECK_THROWS_AS(valuation(make(R, ex1::kIdeal), RingIdeal::unit(R)), std::invalid_argument);
  CHECK(valuation(make(R, ex1::kIdeal), make(R, ex1::kP3)) == 2);
}
