#include <catch2/catch_amalgamated.hpp>

#include "fps/rational_series.hpp"
#include "test_util.hpp"

using namespace fps;
using fps::test::q;
using fps::test::rp;

TEST_CASE("rational series normalization")
{
  RatFun f(rp({2, 2}), rp({2}));
  CHECK(f.den() == rp({1}));
  CHECK(f.num() == rp({1, 1}));

  RatFun reduced(rp({1, 0, -1}), rp({1, -1})); // (1-x^2)/(1-x) = 1+x
  CHECK(reduced.is_polynomial());
  CHECK(reduced.num() == rp({1, 1}));

  CHECK_THROWS_AS(RatFun(rp({1}), rp({0, 1})), std::invalid_argument); // q(0) = 0
  CHECK_THROWS_AS(RatFun(rp({1}), RatPoly()), std::invalid_argument);
}

TEST_CASE("expansion by long division")
{
  TruncSeries a = RatFun::pole_term(q(1), q(2)).expand(5);
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(a.coeff_at(n) == Rat(pow_int(2, n)));

  TruncSeries b = RatFun(rp({0, 0, 1})).expand(4);
  CHECK(b == TruncSeries::from_poly(rp({0, 0, 1}), 4));

  // geometric series by long division: [x^5] of 1/(1-x) at horizon 8
  CHECK(RatFun::pole_term(q(1), q(1)).expand(8).coeff_at(5) == q(1));

  // 1/(1-3x+2x^2): coefficients 2^{n+1}-1
  TruncSeries c = RatFun(rp({1}), rp({1, -3, 2})).expand(4);
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(c.coeff_at(n) == Rat(pow_int(2, n + 1) - 1));
}

TEST_CASE("partial fraction decomposition")
{
  RatFun f(rp({1}), rp({1, -3, 2})); // 1/((1-x)(1-2x))
  PartialFractions pf = partial_fractions(f);
  CHECK(pf.poly_part.is_zero());
  REQUIRE(pf.terms.size() == 2);
  CHECK(pf.terms[0].alpha == q(1));
  CHECK(pf.terms[0].order == 1);
  CHECK(pf.terms[0].beta == q(-1));
  CHECK(pf.terms[1].alpha == q(2));
  CHECK(pf.terms[1].order == 1);
  CHECK(pf.terms[1].beta == q(2));
  CHECK(pf.recombine() == f);

  PartialFractions just_poly = partial_fractions(RatFun(rp({0, 1})));
  CHECK(just_poly.poly_part == rp({0, 1}));
  CHECK(just_poly.terms.empty());

  PartialFractions dbl = partial_fractions(RatFun(rp({1}), rp({1, -2, 1})));
  REQUIRE(dbl.terms.size() == 1);
  CHECK(dbl.terms[0].alpha == q(1));
  CHECK(dbl.terms[0].order == 2);
  CHECK(dbl.terms[0].beta == q(1));

  // golden-ratio poles are out of scope
  CHECK_THROWS_AS(partial_fractions(RatFun(rp({1}), rp({1, -1, -1}))), IrreducibleFactorError);
}

TEST_CASE("decomposition is canonical under recombination")
{
  RatFun f = RatFun(rp({3, 1})) + RatFun::pole_term(q(5), q(1, 2), 2) +
             RatFun::pole_term(q(-2), q(3));
  PartialFractions pf = partial_fractions(f);
  CHECK(pf.recombine() == f);
  PartialFractions again = partial_fractions(pf.recombine());
  CHECK(again.poly_part == pf.poly_part);
  REQUIRE(again.terms.size() == pf.terms.size());
  for (std::size_t i = 0; i < pf.terms.size(); ++i) {
    CHECK(again.terms[i].alpha == pf.terms[i].alpha);
    CHECK(again.terms[i].order == pf.terms[i].order);
    CHECK(again.terms[i].beta == pf.terms[i].beta);
  }
  CHECK(f.expand(15) == pf.recombine().expand(15));
}

TEST_CASE("pole proposition checker")
{
  RatFun A = RatFun::pole_term(q(1), q(1)); // 1/(1-x)
  PolePropResult r1 = check_pole_prop(rp({1}), 2, q(1), A);
  CHECK(r1.verdict.ok());
  REQUIRE(r1.result_poles.size() == 1);
  CHECK(r1.result_poles[0].first == q(1));
  CHECK(r1.result_poles[0].second == 2);

  PolePropResult r2 = check_pole_prop(rp({1}), 1, q(1), RatFun(rp({0, 1})));
  CHECK(r2.verdict.ok());
  CHECK(r2.result_polynomial);

  // (1-x)A cancels the pole of A; the sum keeps exactly the poles of A'
  PolePropResult r3 = check_pole_prop(rp({1, -1}), 0, q(1), A);
  CHECK(r3.verdict.ok());
  REQUIRE(r3.result_poles.size() == 1);
  CHECK(r3.result_poles[0].second == 2);
  CHECK(r3.result_poles == r3.derivative_poles);

  CHECK_THROWS_AS(check_pole_prop(rp({1}), 0, q(0), A), std::invalid_argument);
}

TEST_CASE("polynomial gcd and division helpers")
{
  auto [quot, rem] = divmod(rp({1, 0, 0, 1}), rp({1, 1}));
  CHECK(quot * rp({1, 1}) + rem == rp({1, 0, 0, 1}));
  CHECK(rem.degree() < 1);

  CHECK(poly_gcd(rp({1, 2, 1}), rp({1, 1})) == rp({1, 1}));
  CHECK(poly_gcd(rp({1, 1}), rp({1, -1})).degree() == 0);
  CHECK_THROWS_AS(divmod(rp({1}), RatPoly()), std::domain_error);
}
