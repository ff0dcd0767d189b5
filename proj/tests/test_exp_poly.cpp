#include <catch2/catch_amalgamated.hpp>

#include "fps/exp_poly.hpp"
#include "test_util.hpp"

using namespace fps;
using fps::test::en;
using fps::test::q;
using fps::test::rp;

namespace {
ExpPoly x_exp(long long k, long long rate)
{
  return ExpPoly::monomial_exp(static_cast<unsigned>(k), q(rate));
}
} // namespace

TEST_CASE("algebra closure: products merge rates")
{
  ExpPoly exp1 = ExpPoly::exponential();
  ExpPoly prod = exp1 * exp1;
  CHECK(prod == ExpPoly::exponential(q(2)));

  // coefficient cross-check against truncated series to horizon 12
  TruncSeries direct = to_series(prod, 12);
  CHECK(direct == TruncSeries::exp_series(12).inner_scale(q(2)));

  CHECK((x_exp(1, -1) + x_exp(1, -1).scaled(q(-1))).is_zero());
  CHECK(ExpPoly::from_poly(rp({0, 1})) * x_exp(1, -1) == x_exp(2, -1));
}

TEST_CASE("derivative follows the product rule per part")
{
  CHECK(ExpPoly::exponential(q(-1)).derivative() == ExpPoly::exponential(q(-1)).scaled(q(-1)));
  for (unsigned k = 1; k <= 4; ++k) {
    ExpPoly fk = ExpPoly::monomial_exp(k, q(-1));
    ExpPoly expect = ExpPoly::monomial_exp(k - 1, q(-1)).scaled(Rat(Int(k))) - fk;
    CHECK(fk.derivative() == expect);
  }
  CHECK(ExpPoly::from_poly(rp({0, 0, 1})).derivative() == ExpPoly::from_poly(rp({0, 2})));
}

TEST_CASE("primitive inverts the derivative and vanishes at zero")
{
  ExpPoly em = ExpPoly::exponential(q(-1));
  ExpPoly prim = em.primitive();
  CHECK(prim == ExpPoly::constant(q(1)) - em); // 1 - Exp(-x)

  CHECK(ExpPoly::constant(q(1)).primitive() == ExpPoly::from_poly(rp({0, 1})));

  // primitive of x Exp(-x) is 1 - (x+1)Exp(-x)
  ExpPoly p = x_exp(1, -1).primitive();
  CHECK(p == ExpPoly::constant(q(1)) - ExpPoly::term(q(-1), lift(rp({1, 1}))));
  CHECK(p.derivative() == x_exp(1, -1));
  CHECK(p.value(q(0)).is_zero());

  // series cross-check to horizon 12
  CHECK(to_series(p, 12) == to_series(x_exp(1, -1), 11).primitive());
}

TEST_CASE("shift is exact on the closed class")
{
  ExpPoly f = x_exp(2, -1) + ExpPoly::from_poly(rp({1, 0, 3}));
  CHECK(f.shift(q(0)) == f);

  // Exp(-x) shifted by -1 picks up the scalar e
  ExpPoly shifted = ExpPoly::exponential(q(-1)).shift(q(-1));
  CHECK(shifted == ExpPoly::exponential(q(-1)).scaled(ExpNumber::e_pow(q(1))));

  CHECK(ExpPoly::from_poly(rp({0, 0, 1})).shift(q(1)) == ExpPoly::from_poly(rp({1, 2, 1})));
}

TEST_CASE("inner scaling maps rates and arguments")
{
  CHECK(ExpPoly::exponential().inner_scale(q(-1)) == ExpPoly::exponential(q(-1)));
  CHECK(x_exp(1, 1).inner_scale(q(2)) ==
        ExpPoly::term(q(2), lift(rp({0, 2})))); // 2x Exp(2x)

  ExpPoly f = x_exp(1, -1) + ExpPoly::from_poly(rp({4, 7}));
  ExpPoly z = f.inner_scale(q(0));
  CHECK(z == ExpPoly::constant(q(4))); // f(0x) = [x^0]f
}

TEST_CASE("point values in the exp-number ring")
{
  CHECK(ExpPoly::exponential().value(q(1)) == en({{1, 1}}));
  CHECK((ExpPoly::constant(q(1)) - ExpPoly::exponential(q(-1))).value(q(0)).is_zero());
  CHECK(x_exp(1, -1).value(q(2)) == ExpNumber::e_pow(q(-2), q(2)));
}

TEST_CASE("Newton integrals as primitive differences")
{
  CHECK(newton_integral(ExpPoly::from_poly(rp({0, 1})), q(0), q(2)) == ExpNumber(q(2)));
  CHECK(newton_integral(ExpPoly::exponential(), q(0), q(1)) == en({{1, 1}, {0, -1}}));
  ExpPoly f = x_exp(3, -2) + ExpPoly::from_poly(rp({1, 5}));
  CHECK(newton_integral(f, q(3, 2), q(3, 2)).is_zero());
}

TEST_CASE("improper integrals need decaying rates")
{
  CHECK(improper_integral(ExpPoly::exponential(q(-1)), q(0)) == ExpNumber(q(1)));
  Int fact = 1;
  for (unsigned k = 0; k <= 20; ++k) {
    if (k)
      fact *= k;
    CHECK(improper_integral(ExpPoly::monomial_exp(k, q(-1)), q(0)) == ExpNumber(Rat(fact)));
  }
  CHECK(improper_integral(ExpPoly::exponential(q(-1)), q(1)) == en({{-1, 1}}));

  CHECK_THROWS_AS(improper_integral(ExpPoly::constant(q(1)), q(0)), DivergentIntegralError);
  CHECK_THROWS_AS(improper_integral(ExpPoly::exponential(), q(0)), DivergentIntegralError);
}

TEST_CASE("factorial evaluation of polynomial integrands")
{
  CHECK(euler_eval(rp({0, 1, -2, 1})) == q(3)); // 6 - 4 + 1
  CHECK(euler_eval(rp({1})) == q(1));
  CHECK(euler_eval(rp({0, 0, 1, 1})) == q(8));
  CHECK(euler_eval(RatPoly()) == q(0));
}

TEST_CASE("interval series view pins rational data exactly")
{
  auto exp_view = to_interval_series(ExpPoly::exponential(), 3, q(1, 100));
  std::vector<Rat> expect{q(1), q(1), q(1, 2), q(1, 6)};
  for (unsigned n = 0; n <= 3; ++n) {
    CHECK(exp_view[n].width() == 0);
    CHECK(exp_view[n].lo() == expect[n]);
  }

  // shifted Exp(-x): coefficients e * (-1)^n / n!
  ExpPoly shifted = ExpPoly::exponential(q(-1)).shift(q(-1));
  auto view = to_interval_series(shifted, 2, parse_rat("1e-6"));
  Rat e_lo = parse_rat("2.718281828459"), e_hi = parse_rat("2.718281828460");
  CHECK(view[0].lo() <= e_lo);
  CHECK(view[0].hi() >= e_hi);
  CHECK(view[1].lo() <= -e_hi); // contains -e
  CHECK(view[1].hi() >= -e_lo);
  CHECK(view[2].lo() <= e_lo / 2); // contains e/2
  CHECK(view[2].hi() >= e_hi / 2);

  auto zeros = to_interval_series(ExpPoly(), 4, q(1));
  for (const auto& iv : zeros)
    CHECK(iv == Interval(q(0)));
}

TEST_CASE("sequence convergence check for improper integrals")
{
  std::vector<Rat> points;
  for (int b = 5; b <= 50; b += 5)
    points.emplace_back(b);

  auto ok = numeric_improper_check(ExpPoly::exponential(q(-1)), q(0), ExpNumber(q(1)), points,
                                   parse_rat("1e-6"));
  CHECK(ok.pass);
  CHECK(ok.primary.first_stay >= 0);

  auto ok2 = numeric_improper_check(x_exp(1, -1), q(0), ExpNumber(q(1)), points,
                                    parse_rat("1e-6"));
  CHECK(ok2.pass);

  auto bad = numeric_improper_check(ExpPoly::constant(q(1)), q(0), ExpNumber(q(1)), points,
                                    parse_rat("1e-6"));
  CHECK_FALSE(bad.pass);

  CHECK_THROWS_AS(numeric_improper_check(ExpPoly::constant(q(1)), q(0), ExpNumber(), {},
                                         parse_rat("1e-6")),
                  std::invalid_argument);
  CHECK_THROWS_AS(numeric_improper_check(ExpPoly::constant(q(1)), q(0), ExpNumber(),
                                         {q(2), q(1)}, parse_rat("1e-6")),
                  std::invalid_argument);
}

TEST_CASE("series-route integral enclosure")
{
  // integral over [0,2] of x e^{-x} = 1 - 3 e^{-2} = 0.59399415029016...
  Interval iv = enclose_integral_series(rp({0, 1}), q(2), parse_rat("1e-9"));
  CHECK(iv.width() <= parse_rat("1e-9"));
  CHECK(iv.lo() <= parse_rat("0.593994150290"));
  CHECK(iv.hi() >= parse_rat("0.593994150290"));

  CHECK(enclose_integral_series(rp({0, 1}), q(0), q(1)) == Interval(q(0)));
  CHECK(enclose_integral_series(RatPoly(), q(3), q(1)) == Interval(q(0)));

  // exact-route equality: the enclosure must contain the exact Newton value
  ExpNumber exact = newton_integral(x_exp(1, -1), q(0), q(2)); // 1 - 3e^{-2}
  CHECK(exact == en({{0, 1}}) + ExpNumber::e_pow(q(-2), q(-3)));
  Interval tight = enclose(exact, parse_rat("1e-12"));
  CHECK(iv.intersects(tight));
}

TEST_CASE("independent interval evaluation agrees with exact values")
{
  ExpPoly f = x_exp(2, -1) + ExpPoly::from_poly(rp({1, -2}));
  Rat v = q(3, 2);
  Interval indep = interval_value(f, v, parse_rat("1e-10"));
  Interval tight = enclose(f.value(v), parse_rat("1e-20"));
  CHECK(indep.intersects(tight));
  CHECK(indep.contains(tight.midpoint()));
}
