#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "idealfact/factorization.hpp"
#include "idealfact/errors.hpp"
#include "idealfact/oracle.hpp"

using namespace idealfact;
using namespace idealfact::fixtures;

TEST_CASE("example over F_13: stages") {
  const auto R = ring(13, ex1::kCurve);
  const auto a = make(R, ex1::kIdeal);
  const auto rd = radical_decomposition(a);
  REQUIRE(rd.size() == 2);
  CHECK(rd[0] == make(R, ex1::kG1));
  CHECK(rd[1] == make(R, ex1::kG2));
  const auto h1 = distinct_degree(rd[0]);
  REQUIRE(h1.size() == 3);
  CHECK(h1[0].is_unit());
  CHECK(h1[1].is_unit());
  CHECK(h1[2] == r_intersect(make(R, ex1::kP1), make(R, ex1::kP2)));
  // The reference h13 generates the same ideal as p1 ∩ p2.
  CHECK(h1[2] == make(R, ex1::kH13));
  const auto h2 = distinct_degree(rd[1]);
  REQUIRE(h2.size() == 3);
  CHECK(h2[2] == make(R, ex1::kH23));
}

TEST_CASE("example over F_19: stages") {
  const auto R = ring(19, ex2::kCurve);
  const auto a = make(R, ex2::kIdeal);
  const auto rd = radical_decomposition(a);
  REQUIRE(rd.size() == 4);
  CHECK(rd[0] == make(R, ex2::kG1));
  CHECK(rd[1] == make(R, ex2::kG2));
  CHECK(rd[2].is_unit());
  CHECK(rd[3] == make(R, ex2::kG4));
  const auto h4 = distinct_degree(rd[3]);
  REQUIRE(h4.size() == 3);
  CHECK(h4[2] == make(R, ex2::kH43));
}

TEST_CASE("F_19 example ideal carries p4 to the fourth power") {
  // The reference generators recombine as p1 p2 p3^2 p4^4, not p4^3.
  const auto R = ring(19, ex2::kCurve);
  const auto a = make(R, ex2::kIdeal);
  const auto p1 = make(R, ex2::kH12), p2 = make(R, ex2::kH14), p3 = make(R, ex2::kH23), p4 = make(R, ex2::kH43);
  CHECK(a.dimension() == 2 + 4 + 2 * 3 + 4 * 3);
  CHECK(recombine(R, {{p1, 1, 2}, {p2, 1, 4}, {p3, 2, 3}, {p4, 4, 3}}) == a);
  CHECK(!(recombine(R, {{p1, 1, 2}, {p2, 1, 4}, {p3, 2, 3}, {p4, 3, 3}}) == a));
  std::mt19937_64 rng(0);
  Factorization expect{{p1, 1, 2}, {p2, 1, 4}, {p3, 2, 3}, {p4, 4, 3}};
  sort_canonically(expect);
  CHECK(same_factorization(factorize(a, rng), expect));
}

TEST_CASE("F_13 example factorization") {
  const auto R = ring(13, ex1::kCurve);
  std::mt19937_64 rng(0);
  Factorization expect{{make(R, ex1::kP1), 1, 3}, {make(R, ex1::kP2), 1, 3}, {make(R, ex1::kP3), 2, 3}};
  sort_canonically(expect);
  CHECK(same_factorization(factorize(make(R, ex1::kIdeal), rng), expect));
}

TEST_CASE("distinct-degree named cases") {
  const auto R2 = ring(19, ex2::kCurve);
  const auto h = distinct_degree(make(R2, ex2::kG1));
  REQUIRE(h.size() == 4);
  CHECK(h[0].is_unit());
  CHECK(h[1] == make(R2, ex2::kH12));
  CHECK(h[2].is_unit());
  CHECK(h[3] == make(R2, ex2::kH14));
  CHECK(distinct_degree(RingIdeal::unit(R2)).empty());
  CHECK_THROWS_AS(distinct_degree(r_power(make(R2, ex2::kH12), 2)), std::invalid_argument);
  CHECK_THROWS_AS(distinct_degree(make(R2, {"0"})), std::invalid_argument);
  const auto g2 = distinct_degree(make(R2, ex2::kG2));
  REQUIRE(g2.size() == 3);
  CHECK(g2[2] == make(R2, ex2::kH23));
}

TEST_CASE("radical decomposition named cases") {
  const auto R = ring(13, ex1::kCurve);
  const auto p = make(R, ex1::kP1);
  const auto rd = radical_decomposition(p);
  REQUIRE(rd.size() == 1);
  CHECK(rd[0] == p);
  CHECK_THROWS_AS(radical_decomposition(RingIdeal::unit(R)), std::invalid_argument);
  CHECK_THROWS_AS(radical_decomposition(make(R, {"0"})), std::invalid_argument);
}

TEST_CASE("equal-degree named cases") {
  const auto R1 = ring(13, ex1::kCurve);
  const auto h13 = r_intersect(make(R1, ex1::kP1), make(R1, ex1::kP2));
  for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
    std::mt19937_64 rng(seed);
    const auto parts = equal_degree(h13, 3, rng);
    REQUIRE(parts.size() == 2);
    CHECK(((parts[0] == make(R1, ex1::kP1) && parts[1] == make(R1, ex1::kP2)) ||
           (parts[1] == make(R1, ex1::kP1) && parts[0] == make(R1, ex1::kP2))));
  }
  const auto R2 = ring(19, ex2::kCurve);
  std::mt19937_64 rng(0);
  EdfTranscript log;
  const auto one = equal_degree(make(R2, ex2::kH23), 3, rng, {}, &log);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == make(R2, ex2::kH23));
  CHECK(log.draws == 0);
  CHECK_THROWS_AS(equal_degree(make(R2, ex2::kH23), 0, rng), std::invalid_argument);
  EdfOptions verify;
  verify.verify_input = true;
  CHECK_THROWS_AS(equal_degree(make(R2, ex2::kG1), 2, rng, verify), std::invalid_argument);
  CHECK_THROWS_AS(equal_degree(h13, 2, rng, verify), std::invalid_argument);
  CHECK(equal_degree(h13, 3, rng, verify).size() == 2);
}

TEST_CASE("equal-degree is deterministic per seed") {
  const auto R = ring(5, kSmallCurves[2].curve);
  const auto pool = enumerate_primes(R, 2);
  std::vector<RingIdeal> deg2;
  for (const auto& [p, d] : pool)
    if (d == 2) deg2.push_back(p);
  REQUIRE(deg2.size() >= 5);
  RingIdeal h = RingIdeal::unit(R);
  for (std::size_t i = 0; i < 5; ++i) h = r_product(h, deg2[i]);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    std::mt19937_64 r1(seed), r2(seed);
    EdfTranscript t1, t2;
    const auto a = equal_degree(h, 2, r1, {}, &t1);
    const auto b = equal_degree(h, 2, r2, {}, &t2);
    CHECK(a.size() == 5);
    CHECK(a == b);
    CHECK(t1.events == t2.events);
    CHECK(t1.draws == t2.draws);
  }
}

TEST_CASE("direct sampling and the draw cap") {
  const auto R = ring(3, kSmallCurves[1].curve);
  std::vector<RingIdeal> rational;
  for (const auto& [p, d] : enumerate_primes(R, 1)) rational.push_back(p);
  REQUIRE(rational.size() == 5);
  RingIdeal h = RingIdeal::unit(R);
  for (const auto& p : rational) h = r_product(h, p);
  EdfOptions direct;
  direct.sampling = EdfSampling::Direct;
  std::mt19937_64 rng(0);
  const auto parts = equal_degree(h, 1, rng, direct);
  CHECK(parts.size() == 5);
  for (const auto& p : parts) CHECK(std::find(rational.begin(), rational.end(), p) != rational.end());
  // With one draw per split, some split of the F_13 degree-3 pair fails:
  // a uniform b is a zero divisor with probability about 2/13^3.
  const auto R1 = ring(13, ex1::kCurve);
  const auto h13 = r_intersect(make(R1, ex1::kP1), make(R1, ex1::kP2));
  direct.max_draws = 1;
  std::mt19937_64 rng0(0);
  CHECK_THROWS_AS(equal_degree(h13, 3, rng0, direct), ProbabilisticFailure);
}

TEST_CASE("primality") {
  const auto R1 = ring(13, ex1::kCurve);
  const auto c = is_prime(make(R1, ex1::kP1));
  CHECK(c.prime);
  CHECK(c.degree == 3);
  const auto R2 = ring(19, ex2::kCurve);
  CHECK(!is_prime(make(R2, ex2::kG1)).prime);
  CHECK(!is_prime(r_power(make(R2, ex2::kH12), 2)).prime);
  CHECK(is_prime(make(R2, ex2::kH14)).degree == 4);
  CHECK_THROWS_AS(is_prime(RingIdeal::unit(R2)), std::invalid_argument);
}

TEST_CASE("square of an oracle prime") {
  const auto R = ring(5, kSmallCurves[2].curve);
  const auto pool = enumerate_primes(R, 2);
  std::mt19937_64 rng(0);
  for (const auto& [p, d] : pool) {
    const auto f = factorize(r_power(p, 2), rng);
    REQUIRE(f.size() == 1);
    CHECK(f[0].prime == p);
    CHECK(f[0].multiplicity == 2);
    CHECK(f[0].degree == d);
  }
}

TEST_CASE("stage invariants and oracle equivalence on random ideals") {
  std::mt19937_64 gen(2025);
  std::size_t cases = 0;
  for (const auto& sc : kSmallCurves) {
    const auto R = ring(sc.q, sc.curve);
    const auto pool = enumerate_primes(R, 3);
    for (int n = 0; n < 40; ++n, ++cases) {
      const auto built = random_factorization(pool, gen);
      const auto a = recombine(R, built);
      CAPTURE(canonical_text(a));
      std::mt19937_64 rng(static_cast<std::uint64_t>(n));
      FactorizeTrace tr;
      const auto f = factorize(a, rng, {}, &tr);
      CHECK(same_factorization(f, built));
      CHECK(recombine(R, f) == a);
      if (n % 4 == 0) CHECK(same_factorization(oracle_factor(a, 3), built));
      // Radical decomposition.
      REQUIRE(!tr.radical.empty());
      CHECK(!tr.radical.back().is_unit());
      RingIdeal prod = RingIdeal::unit(R);
      for (std::size_t j = 0; j < tr.radical.size(); ++j) {
        const auto& g = tr.radical[j];
        CHECK(r_radical(g) == g);
        for (std::size_t i = 0; i < j; ++i) CHECK(r_sum(g, tr.radical[i]).is_unit());
        prod = r_product(prod, r_power(g, static_cast<unsigned>(j + 1)));
      }
      CHECK(prod == a);
      // Distinct-degree factors.
      for (std::size_t j = 0; j < tr.radical.size(); ++j) {
        if (tr.radical[j].is_unit()) continue;
        const auto& h = tr.ddf[j];
        REQUIRE(!h.empty());
        CHECK(!h.back().is_unit());
        RingIdeal hp = RingIdeal::unit(R);
        for (std::size_t k = 0; k < h.size(); ++k) {
          hp = r_product(hp, h[k]);
          if (h[k].is_unit()) continue;
          const auto d = static_cast<unsigned>(k + 1);
          CHECK(is_equal_degree(h[k], d));
          // Equal-degree pieces: distinct primes of degree d multiplying back to h.
          std::mt19937_64 r(static_cast<std::uint64_t>(n) + k);
          const auto parts = equal_degree(h[k], d, r);
          RingIdeal pp = RingIdeal::unit(R);
          for (std::size_t i = 0; i < parts.size(); ++i) {
            const auto pc = is_prime(parts[i]);
            CHECK(pc.prime);
            CHECK(pc.degree == d);
            for (std::size_t i2 = 0; i2 < i; ++i2) CHECK(r_sum(parts[i], parts[i2]).is_unit());
            pp = r_product(pp, parts[i]);
          }
          CHECK(pp == h[k]);
        }
        CHECK(hp == tr.radical[j]);
      }
    }
  }
  CHECK(cases >= 100);
}

TEST_CASE("factorization preconditions") {
  const auto R = ring(13, ex1::kCurve);
  std::mt19937_64 rng(0);
  CHECK_THROWS_AS(factorize(RingIdeal::unit(R), rng), std::invalid_argument);
  CHECK_THROWS_AS(factorize(make(R, {"0"}), rng), std::invalid_argument);
}
