#include <catch2/catch_amalgamated.hpp>

#include "fps/exp_number.hpp"
#include "fps/interval.hpp"
#include "fps/verdict.hpp"
#include "test_util.hpp"

using namespace fps;
using fps::test::en;
using fps::test::q;

TEST_CASE("rational arithmetic is exact and canonical")
{
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 4) == q(1, 2));
  CHECK(num(q(2, 4)) == 1);
  CHECK(den(q(2, 4)) == 2);
  CHECK(q(7, 3) * q(3, 7) == 1);
  CHECK(den(q(0, 5)) == 1); // canonical zero
  CHECK_THROWS(q(1) / q(0));
}

TEST_CASE("rational parsing and formatting")
{
  CHECK(parse_rat("5/6") == q(5, 6));
  CHECK(parse_rat("-7") == q(-7));
  CHECK(parse_rat("-0.25") == q(-1, 4));
  CHECK(parse_rat("1e-8") == Rat(Int(1), pow_int(10, 8)));
  CHECK(parse_rat("2.5e3") == q(2500));
  CHECK(parse_rat("1E2") == q(100));
  CHECK(to_string(q(-3, 2)) == "-3/2");
  CHECK(to_string(q(5)) == "5/1");
  CHECK_THROWS_AS(parse_rat("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("interval arithmetic on exact endpoints")
{
  Interval a(q(1), q(2)), b(q(3), q(4));
  CHECK((a + b) == Interval(q(4), q(6)));
  CHECK((a - b) == Interval(q(-3), q(-1)));

  Interval c(q(-1), q(2));
  CHECK((c * c) == Interval(q(-2), q(4)));
  CHECK(pow(c, 2) == Interval(q(0), q(4))); // tight even power
  CHECK(abs(Interval(q(-3), q(1))) == Interval(q(0), q(3)));
  CHECK(pow(c, 0) == Interval(q(1)));

  CHECK_THROWS_AS(Interval(q(2), q(1)), std::invalid_argument);
  CHECK_THROWS_AS(reciprocal(c), std::domain_error);
  CHECK(reciprocal(Interval(q(2), q(4))) == Interval(q(1, 4), q(1, 2)));
}

TEST_CASE("exp-number ring with symbolic equality")
{
  ExpNumber e1 = ExpNumber::e_pow(q(1));
  CHECK(e1 * e1 == ExpNumber::e_pow(q(2))); // exponents add

  ExpNumber z = ExpNumber(q(3)) + ExpNumber(q(-3));
  CHECK(z.is_zero());

  // (e - 1)(e + 1) = e^2 - 1
  ExpNumber lhs = (e1 - ExpNumber(q(1))) * (e1 + ExpNumber(q(1)));
  CHECK(lhs == en({{2, 1}, {0, -1}}));

  CHECK(en({{0, 5}}).is_rational());
  CHECK(en({{0, 5}}).rational_value() == q(5));
  CHECK_FALSE(en({{1, 1}}).is_rational());
  CHECK_THROWS_AS(en({{1, 1}}).rational_value(), std::logic_error);
}

TEST_CASE("enclosure of e^q from partial sums with tail majorant")
{
  Interval one = enclose_exp(q(0), q(1));
  CHECK(one == Interval(q(1)));
  CHECK(one.width() == 0);

  // 12-digit brackets of e and e^{-2}
  Rat e_lo = parse_rat("2.718281828459"), e_hi = parse_rat("2.718281828460");
  Interval e1 = enclose_exp(q(1), parse_rat("1e-6"));
  CHECK(e1.width() <= parse_rat("1e-6"));
  CHECK(e1.lo() <= e_lo);
  CHECK(e1.hi() >= e_hi);

  Rat em2_lo = parse_rat("0.135335283236"), em2_hi = parse_rat("0.135335283237");
  Interval em2 = enclose_exp(q(-2), parse_rat("1e-6"));
  CHECK(em2.width() <= parse_rat("1e-6"));
  CHECK(em2.lo() <= em2_lo);
  CHECK(em2.hi() >= em2_hi);

  CHECK_THROWS_AS(enclose_exp(q(1), q(0)), std::invalid_argument);

  // bit-exact reproducibility: for q=1, eps=1e-6 the stop index is m=9,
  // so lo = sum_{n<=9} 1/n! and the tail majorant is (1/10!)/(1 - 1/11)
  CHECK(e1.lo() == q(98641, 36288));
  CHECK(e1.width() == q(11, 36288000));
}

TEST_CASE("enclosure of exp-number combinations")
{
  CHECK(enclose(ExpNumber(), q(1)) == Interval(q(0)));
  CHECK(enclose(en({{0, 1}}) * q(5, 2) / q(1), q(1)) == Interval(q(5, 2)));

  // e - 1 around 1.71828...
  ExpNumber v = en({{1, 1}, {0, -1}});
  Interval iv = enclose(v, parse_rat("1e-4"));
  CHECK(iv.width() <= parse_rat("1e-4"));
  CHECK(iv.contains(parse_rat("1.7182818284")));

  // requested widths are honored across an eps ladder
  for (const char* eps : {"1", "1e-3", "1e-9", "1e-15"}) {
    Rat e = parse_rat(eps);
    CHECK(enclose(v, e).width() <= e);
  }
}

TEST_CASE("certified comparisons separate, refute, or admit defeat")
{
  ExpNumber e1 = ExpNumber::e_pow(q(1));

  auto lhs = [&](const Rat& eps) { return enclose(e1, eps); };
  auto three = [](const Rat&) { return Interval(q(3)); };
  CHECK(certify_le(lhs, three, q(1, 10)) == Status::pass);   // e <= 3
  CHECK(certify_le(three, lhs, q(1, 10)) == Status::fail);   // 3 <= e refuted

  // enclosures that never separate end undecided, not false
  auto wide_a = [](const Rat&) { return Interval(q(0), q(2)); };
  auto wide_b = [](const Rat&) { return Interval(q(1), q(3)); };
  CHECK(certify_le(wide_a, wide_b, q(1)) == Status::undecided);

  // equality at a point passes a non-strict comparison
  auto zero = [](const Rat&) { return Interval(q(0)); };
  CHECK(certify_le(zero, zero, q(1)) == Status::pass);
}
