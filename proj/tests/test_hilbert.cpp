#include <catch2/catch_amalgamated.hpp>

#include "fps/hilbert.hpp"
#include "fps/random.hpp"
#include "test_util.hpp"

using namespace fps;
using fps::test::en;
using fps::test::q;
using fps::test::rp;

namespace {
HilbertInstance two_minus_e() { return HilbertInstance({Int(2), Int(-1)}); }
HilbertInstance quadratic() { return HilbertInstance({Int(1), Int(-3), Int(1)}); }
} // namespace

TEST_CASE("instance validation")
{
  CHECK_THROWS_AS(HilbertInstance({Int(2)}), std::invalid_argument);
  CHECK_THROWS_AS(HilbertInstance({Int(0), Int(1)}), std::invalid_argument);
  CHECK(two_minus_e().n() == 1);
  CHECK(two_minus_e().combination() == en({{0, 2}, {1, -1}}));
}

TEST_CASE("root-product polynomials")
{
  CHECK(build_pr(1, 1) == rp({0, 1, -2, 1})); // x(x-1)^2

  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned r = 1; r <= 6; ++r) {
      RatPoly pr = build_pr(r, n);
      CHECK(pr.degree() == static_cast<int>(r + n * (r + 1)));
      Rat lead = Rat(pow_int(factorial(n), r + 1));
      if ((n * (r + 1)) % 2 == 1)
        lead = -lead;
      CHECK(pr.coeff(r) == lead);
      for (unsigned j = 0; j < r; ++j)
        CHECK(pr.coeff(j) == 0);
      for (unsigned j = 1; j <= n; ++j)
        CHECK(pr.eval(q(j)) == 0);
    }
  }
  CHECK_THROWS_AS(build_pr(0, 1), std::invalid_argument);
}

TEST_CASE("B values through the factorial rule")
{
  CHECK(compute_Br(two_minus_e(), 1) == -2);

  // an independent fold of the two shifted polynomials, away from the
  // pipeline: p_1 = x^3-2x^2+x, p_1(x+1) = x^3+x^2
  long long p1[] = {0, 1, -2, 1};
  long long p1s[] = {0, 0, 1, 1};
  Int fact = 1, lhs = 0, rhs = 0;
  for (int j = 0; j <= 3; ++j) {
    if (j)
      fact *= j;
    lhs += Int(p1[j]) * fact;
    rhs += Int(p1s[j]) * fact;
  }
  CHECK(Int(2) * lhs - rhs == compute_Br(two_minus_e(), 1));

  for (unsigned r = 1; r <= 10; ++r) {
    CHECK(divides(factorial(r), compute_Br(two_minus_e(), r)));
    CHECK(divides(factorial(r), compute_Br(quadratic(), r)));
  }
}

TEST_CASE("structure of B: divisibility, residue, nonvanishing")
{
  for (unsigned r = 1; r <= 10; ++r) {
    CHECK(check_Br_structure(two_minus_e(), r, compute_Br(two_minus_e(), r)).ok());
    CHECK(check_Br_structure(quadratic(), r, compute_Br(quadratic(), r)).ok());
  }
  // spotted example: B_1 = -2 and 2 = a_0 (n!)^2 r! matches -2 mod 2
  Verdict v = check_Br_structure(two_minus_e(), 1, Int(-2));
  CHECK(v.ok());
}

TEST_CASE("exact A values")
{
  // A_1 = -e * (3 - 8/e) = 8 - 3e
  CHECK(compute_Ar_exact(two_minus_e(), 1) == en({{0, 8}, {1, -3}}));

  ArResult ar = compute_Ar(two_minus_e(), 1, parse_rat("1e-8"));
  CHECK(ar.interval.width() <= parse_rat("1e-8"));
  Interval tight = enclose(ar.exact, parse_rat("1e-16"));
  CHECK(ar.interval.intersects(tight));
  CHECK(ar.interval.contains(tight.midpoint()));

  // interval(A_1) + B_1 must meet the enclosure of P * I_1
  Interval shifted = ar.interval + Interval(Rat(compute_Br(two_minus_e(), 1)));
  ExpNumber rhs = two_minus_e().combination() * euler_eval(build_pr(1, 1));
  CHECK(shifted.intersects(enclose(rhs, parse_rat("1e-12"))));
}

TEST_CASE("decomposition identity holds unconditionally")
{
  // both sides are (2 - e) * 3 at r = 1
  Rat i1 = euler_eval(build_pr(1, 1));
  CHECK(i1 == q(3));
  CHECK(compute_Ar_exact(two_minus_e(), 1) + ExpNumber(compute_Br(two_minus_e(), 1)) ==
        two_minus_e().combination() * i1);

  for (unsigned r = 1; r <= 6; ++r) {
    CHECK(check_decomposition(two_minus_e(), r).ok());
    CHECK(check_decomposition(quadratic(), r).ok());
  }

  // random small instances
  RandomSource rs(7);
  for (int c = 0; c < 10; ++c) {
    std::vector<Int> coeffs;
    unsigned n = static_cast<unsigned>(rs.range(1, 3));
    coeffs.push_back(Int(rs.range(1, 5)) * (rs.coin() ? 1 : -1));
    for (unsigned j = 1; j <= n; ++j)
      coeffs.push_back(Int(rs.range(-5, 5)));
    HilbertInstance inst(coeffs);
    for (unsigned r = 1; r <= 4; ++r)
      CHECK(check_decomposition(inst, r).ok());
  }
}

TEST_CASE("exponential bound on A with derived constant")
{
  for (unsigned r = 1; r <= 6; ++r) {
    ArBoundResult res = check_Ar_bound(two_minus_e(), r, parse_rat("1e-8"));
    CHECK(res.verdict.ok());
    CHECK(res.c >= 1);
    // certified: upper end of |A_r| below c^r
    Rat upper = abs(enclose(compute_Ar_exact(two_minus_e(), r), parse_rat("1e-8"))).hi();
    CHECK(upper <= Rat(pow_int(res.c, r)));
  }
  ArBoundResult q2 = check_Ar_bound(quadratic(), 3, parse_rat("1e-8"));
  CHECK(q2.verdict.ok());
  CHECK(q2.l == 4); // coefficients of (x-1)(x-2) are 2,-3,1: max 3, plus 1
}

TEST_CASE("integral bound certification")
{
  CHECK(check_exp_integral_bound(2, 1, parse_rat("1e-8")).ok()); // 0.594 <= 4e^2
  CHECK(check_exp_integral_bound(0, 3, parse_rat("1e-8")).ok()); // 0 <= 0
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned k = 0; k <= 6; ++k)
      CHECK(check_exp_integral_bound(i, k, parse_rat("1e-8")).ok());
}

TEST_CASE("numeric confirmation of the factorial integrals")
{
  std::vector<Rat> points;
  for (int b = 5; b <= 50; b += 5)
    points.emplace_back(b);

  EulerNumericResult r0 = verify_euler_numeric(0, points, parse_rat("1e-6"));
  CHECK(r0.verdict.ok());

  EulerNumericResult r5 = verify_euler_numeric(5, points, parse_rat("1e-6") * Rat(factorial(5)));
  CHECK(r5.verdict.ok());
}

TEST_CASE("report assembly")
{
  HilbertReport rep = hilbert_report(two_minus_e(), 1, parse_rat("1e-8"));
  CHECK(rep.r == 1);
  CHECK(rep.B == -2);
  CHECK(rep.B_residue == 0); // -2 mod 2! = 0
  CHECK(rep.identity_ok);
  CHECK(rep.Ar_exact == en({{0, 8}, {1, -3}}));
  CHECK(rep.bound_c >= 1);
}

TEST_CASE("factorial growth of B overtakes the exponential bound on A")
{
  HilbertInstance inst = two_minus_e();
  Int c = check_Ar_bound(inst, 8, parse_rat("1e-8")).c;
  bool overtaken = false;
  for (unsigned r = 2; r <= 60 && !overtaken; ++r) {
    if (boost::multiprecision::gcd(Int(r + 1), Int(2)) != 1)
      continue; // need r+1 coprime to a_0 n! = 2
    Int B = compute_Br(inst, r);
    CHECK(B != 0);
    CHECK(divides(factorial(r), B));
    overtaken = boost::multiprecision::abs(B) > pow_int(c, r);
  }
  CHECK(overtaken);
}
