#include <algorithm>
#include <random>

#include "doctest.h"
#include "idealfact/groebner.hpp"
#include "test_support.hpp"

using namespace idealfact;
using idealfact::testing::ideal;
using idealfact::testing::P;

namespace {

const FieldPtr f13 = FiniteField::prime(13);

// Small zero-dimensional ideal: a univariate polynomial in x plus y - g(x)
// or a univariate in y, with optional extra random generators.
PolyIdeal random_zerodim(const FieldPtr& k, std::mt19937_64& rng) {
  using idealfact::testing::random_poly;
  using idealfact::testing::random_univariate;
  std::vector<MultiPoly> g{random_univariate(k, rng, 1 + rng() % 3, X), random_univariate(k, rng, 1 + rng() % 3, Y)};
  if (rng() % 2) g.push_back(random_poly(k, rng, 3, 3));
  return PolyIdeal(std::move(g), MonomialOrder::grevlex());
}

}  // namespace

TEST_CASE("reduce") {
  const auto G = ideal(f13, {"x^2 + x"});
  CHECK(reduce(P(f13, "x^2"), G) == P(f13, "12*x"));
  CHECK(reduce(P(f13, "x^2 + x"), G).is_zero());
  CHECK(reduce(P(f13, "1"), ideal(f13, {"x", "y"})) == P(f13, "1"));
  std::mt19937_64 rng(3);
  const auto H = ideal(f13, {"x^3 - y", "y^2 - x*y + 1"});
  for (int n = 0; n < 50; ++n) {
    const auto f = idealfact::testing::random_poly(f13, rng, 5, 6);
    const auto r = reduce(f, H);
    CHECK(reduce(r, H) == r);
    CHECK(H.contains(f - r));
  }
}

TEST_CASE("buchberger named cases") {
  CHECK(ideal(f13, {"x + 1", "x + 2"}).is_unit());
  CHECK(ideal(f13, {"x + 1", "x + 2"}).basis() == std::vector<MultiPoly>{P(f13, "1")});
  const auto G = ideal(f13, {"y^2 - x^3", "x"});
  CHECK(G.basis() == std::vector<MultiPoly>{P(f13, "x"), P(f13, "y^2")});
  // Already reduced basis is a fixed point.
  const auto again = PolyIdeal(G.basis(), MonomialOrder::grevlex());
  CHECK(again.basis() == G.basis());
  CHECK(ideal(f13, {"0"}).is_zero());
  CHECK(ideal(f13, {"3*x - 3"}).basis() == std::vector<MultiPoly>{P(f13, "x - 1")});
  // A textbook example under lex: the twisted-cubic-like curve.
  const auto L = ideal(f13, {"x^2 - y", "x^3 - x"}, MonomialOrder::lex());
  CHECK(L.contains(P(f13, "y^2 - y", MonomialOrder::lex())));
}

TEST_CASE("reduced basis is independent of generator order") {
  std::mt19937_64 rng(5);
  std::vector<MultiPoly> gens{P(f13, "x^3 - y^2 + 1"), P(f13, "x*y^2 - x + 4"), P(f13, "y^3 - 2*x*y"),
                              P(f13, "x^2*y + 7")};
  const auto ref = buchberger(gens, MonomialOrder::grevlex());
  for (int n = 0; n < 100; ++n) {
    std::shuffle(gens.begin(), gens.end(), rng);
    REQUIRE(buchberger(gens, MonomialOrder::grevlex()) == ref);
  }
}

TEST_CASE("basis S-pairs reduce to zero and generators lie in the ideal") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 40; ++n) {
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(idealfact::testing::random_poly(f13, rng, 3, 3));
    const PolyIdeal I(gens, MonomialOrder::grevlex());
    for (const auto& g : gens) CHECK(I.contains(g));
    const auto& B = I.basis();
    for (std::size_t i = 0; i < B.size(); ++i) {
      CHECK(B[i].leading_coeff() == 1);
      for (std::size_t j = i + 1; j < B.size(); ++j) {
        const Monomial l = B[i].leading_monomial().lcm(B[j].leading_monomial());
        const MultiPoly s = B[i].times_term(1, l / B[i].leading_monomial()) - B[j].times_term(1, l / B[j].leading_monomial());
        CHECK(normal_form(s, B).is_zero());
        CHECK(!B[i].leading_monomial().divides(B[j].leading_monomial()));
      }
    }
  }
}

TEST_CASE("sum and product") {
  const auto I = ideal(f13, {"x^2 + y", "y^3"});
  CHECK(ideal_sum(I, ideal(f13, {"0"})) == I);
  CHECK(ideal_sum(I, ideal(f13, {"1"})).is_unit());
  CHECK(ideal_sum(ideal(f13, {"x"}), ideal(f13, {"y"})) == ideal(f13, {"x", "y"}));
  CHECK(ideal_product(I, ideal(f13, {"1"})) == I);
  CHECK(ideal_product(ideal(f13, {"x"}), ideal(f13, {"x"})) == ideal(f13, {"x^2"}));
  const auto m = ideal(f13, {"x", "y"});
  CHECK(ideal_product(m, m) == ideal(f13, {"x^2", "x*y", "y^2"}));
}

TEST_CASE("intersection") {
  const auto I = ideal(f13, {"x^2 + y", "y^3 - x"});
  CHECK(ideal_intersect(I, I) == I);
  CHECK(ideal_intersect(ideal(f13, {"x"}), ideal(f13, {"y"})) == ideal(f13, {"x*y"}));
  CHECK(ideal_intersect(ideal(f13, {"x + 1"}), ideal(f13, {"(x + 1)^2"})) == ideal(f13, {"(x + 1)^2"}));
  // Two rational points.
  CHECK(ideal_intersect(ideal(f13, {"x - 1", "y"}), ideal(f13, {"x - 2", "y"})) ==
        ideal(f13, {"(x - 1)*(x - 2)", "y"}));
}

TEST_CASE("colon") {
  const auto I = ideal(f13, {"x^2 + y", "y^3 - x"});
  CHECK(ideal_colon(I, ideal(f13, {"1"})) == I);
  CHECK(ideal_colon(ideal(f13, {"x^2"}), ideal(f13, {"x"})) == ideal(f13, {"x"}));
  CHECK(ideal_colon(I, I).is_unit());
  CHECK(ideal_colon(ideal(f13, {"x^2", "x*y"}), P(f13, "x")) == ideal(f13, {"x", "y"}));
  CHECK_THROWS_AS(ideal_colon(I, ideal(f13, {"0"})), std::invalid_argument);
}

TEST_CASE("containment laws on random zero-dimensional ideals") {
  std::mt19937_64 rng(23);
  for (const auto& k : {FiniteField::prime(2), FiniteField::prime(3), f13}) {
    for (int n = 0; n < 12; ++n) {
      const auto I = random_zerodim(k, rng);
      const auto J = random_zerodim(k, rng);
      const auto IJ = ideal_product(I, J);
      const auto cap = ideal_intersect(I, J);
      CHECK(I.contains(cap));
      CHECK(J.contains(cap));
      CHECK(cap.contains(IJ));
      const auto col = ideal_colon(I, J);
      CHECK(col.contains(I));
      CHECK(I.contains(ideal_product(col, J)));
      CHECK(ideal_colon(IJ, J).contains(I));
      if (ideal_sum(I, J).is_unit()) CHECK(quotient_dimension(cap) == quotient_dimension(I) + quotient_dimension(J));
    }
  }
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(ideal(f13, {"x - 3", "y"}), X) == P(f13, "x - 3"));
  CHECK(minimal_polynomial(ideal(f13, {"x^2 + 1", "y"}), X) == P(f13, "x^2 + 1"));
  CHECK(minimal_polynomial(ideal(f13, {"x - 3", "y - 5"}), Y) == P(f13, "y - 5"));
  CHECK(minimal_polynomial(ideal(f13, {"1"}), X).is_one());
  CHECK(minimal_polynomial(ideal(f13, {"x^2", "y - x"}), Y) == P(f13, "y^2"));
  CHECK_THROWS_AS(minimal_polynomial(ideal(f13, {"x^2"}), X), std::invalid_argument);
  // The minimal polynomial lies in the ideal and nothing of lower degree does.
  std::mt19937_64 rng(31);
  for (int n = 0; n < 20; ++n) {
    const auto I = random_zerodim(f13, rng);
    for (int v : {X, Y}) {
      const auto m = minimal_polynomial(I, v);
      CHECK(I.contains(m));
      CHECK(m.leading_coeff() == 1);
    }
  }
}

TEST_CASE("zero-dimensional radical") {
  CHECK(zerodim_radical(ideal(f13, {"(x - 1)^2", "y"})) == ideal(f13, {"x - 1", "y"}));
  CHECK(zerodim_radical(ideal(f13, {"x^2", "y^2"})) == ideal(f13, {"x", "y"}));
  const auto rad = ideal(f13, {"x^2 + 1", "y - x"});
  CHECK(zerodim_radical(rad) == rad);
  CHECK_THROWS_AS(zerodim_radical(ideal(f13, {"x*y"})), std::invalid_argument);
  std::mt19937_64 rng(37);
  for (const auto& k : {FiniteField::prime(2), FiniteField::prime(3), f13, FiniteField::extension(2, 2)}) {
    for (int n = 0; n < 10; ++n) {
      const auto I = random_zerodim(k, rng);
      const auto r = zerodim_radical(I);
      CHECK(r.contains(I));
      CHECK(zerodim_radical(r) == r);
      CHECK(zerodim_radical(ideal_product(I, I)) == r);
    }
  }
}

TEST_CASE("standard monomials") {
  CHECK(standard_monomials(ideal(f13, {"x", "y"})) == std::vector<Monomial>{Monomial{}});
  CHECK(standard_monomials(ideal(f13, {"x^2", "y"})) == std::vector<Monomial>{Monomial{}, Monomial::var(X, 1)});
  CHECK(standard_monomials(ideal(f13, {"1"})).empty());
  CHECK(quotient_dimension(ideal(f13, {"x^3 - 1", "y^2 - x"})) == 6);
  CHECK_THROWS_AS(standard_monomials(ideal(f13, {"0"})), std::invalid_argument);
  CHECK_THROWS_AS(standard_monomials(ideal(f13, {"x^2 - y"})), std::invalid_argument);
}
