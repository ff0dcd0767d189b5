#ifndef FPS_HILBERT_HPP
#define FPS_HILBERT_HPP

#include <string>
#include <vector>

#include "fps/exp_poly.hpp"
#include "fps/integers.hpp"
#include "fps/verdict.hpp"

namespace fps {

// Integer coefficients a_0..a_n of the hypothesized combination
// P = a_0 + a_1 e + ... + a_n e^n. The pipeline verifies unconditional
// identities of this data; nothing assumes P = 0.
struct HilbertInstance {
  std::vector<Int> a;

  explicit HilbertInstance(std::vector<Int> coeffs) : a(std::move(coeffs))
  {
    if (a.size() < 2)
      throw std::invalid_argument("instance needs degree n >= 1");
    if (a[0] == 0)
      throw std::invalid_argument("a_0 must be nonzero");
  }

  unsigned n() const { return static_cast<unsigned>(a.size()) - 1; }

  ExpNumber combination() const
  {
    ExpNumber p;
    for (std::size_t j = 0; j < a.size(); ++j)
      p += ExpNumber::e_pow(Rat(Int(j)), Rat(a[j]));
    return p;
  }
};

// p_r(x) = x^r ((x-1)(x-2)...(x-n))^{r+1}; the x^r term has coefficient
// (-1)^{n(r+1)} (n!)^{r+1} and everything below it vanishes.
inline RatPoly build_pr(unsigned r, unsigned n)
{
  if (r < 1 || n < 1)
    throw std::invalid_argument("build_pr: r and n must be positive");
  RatPoly g = RatPoly::constant(Rat(1));
  for (unsigned j = 1; j <= n; ++j)
    g = g * RatPoly(std::vector<Rat>{Rat(-Int(j)), Rat(1)});
  return RatPoly::monomial(Rat(1), r) * g.pow(r + 1);
}

// B_r = sum_j a_j * integral over [0,inf) of p_r(x+j) Exp(-x), evaluated
// exactly through the factorial rule. Always an integer.
inline Int compute_Br(const HilbertInstance& inst, unsigned r)
{
  if (r < 1)
    throw std::invalid_argument("compute_Br: r must be positive");
  RatPoly pr = build_pr(r, inst.n());
  Rat acc = 0;
  for (std::size_t j = 0; j < inst.a.size(); ++j)
    acc += Rat(inst.a[j]) * euler_eval(pr.compose_shift(Rat(Int(j))));
  if (den(acc) != 1)
    throw std::logic_error("compute_Br: non-integer result");
  return num(acc);
}

// Structure of B_r: divisible by r!, congruent to
// (-1)^{n(r+1)} a_0 (n!)^{r+1} r! modulo (r+1)!, and nonzero whenever r+1
// is coprime to a_0 * n!.
inline Verdict check_Br_structure(const HilbertInstance& inst, unsigned r, const Int& B)
{
  const unsigned n = inst.n();
  const Int rf = factorial(r), r1f = factorial(r + 1);
  if (!divides(rf, B))
    return Verdict::fail("r! does not divide B_r");

  Int expected = inst.a[0] * pow_int(factorial(n), r + 1) * rf;
  if ((n * (r + 1)) % 2 == 1)
    expected = -expected;
  if (!divides(r1f, B - expected))
    return Verdict::fail("residue of B_r modulo (r+1)! is wrong");

  Int g = boost::multiprecision::gcd(Int(r + 1), Int(boost::multiprecision::abs(inst.a[0] * factorial(n))));
  if (g == 1 && B == 0)
    return Verdict::fail("B_r vanishes although r+1 is coprime to a_0 n!");
  return Verdict::pass(g == 1 ? "divisibility, residue and nonvanishing hold"
                              : "divisibility and residue hold");
}

// A_r = sum_i a_i e^i * integral over [0,i] of p_r(x) Exp(-x), exact.
inline ExpNumber compute_Ar_exact(const HilbertInstance& inst, unsigned r)
{
  RatPoly pr = build_pr(r, inst.n());
  ExpPoly prim = ExpPoly::term(Rat(-1), lift(pr)).primitive();
  ExpNumber at0 = prim.value(Rat(0));
  ExpNumber acc;
  for (std::size_t i = 1; i < inst.a.size(); ++i) {
    ExpNumber ji = prim.value(Rat(Int(i))) - at0;
    acc += ExpNumber::e_pow(Rat(Int(i)), Rat(inst.a[i])) * ji;
  }
  return acc;
}

struct ArResult {
  ExpNumber exact;
  Interval interval;
};

// Exact value plus an enclosure of width <= eps computed along an
// independent route: each inner integral is enclosed from the series
// expansion alone (enclose_integral_series), never from the closed-form
// antiderivative that the exact path uses.
inline ArResult compute_Ar(const HilbertInstance& inst, unsigned r, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("compute_Ar: eps must be positive");
  ArResult res;
  res.exact = compute_Ar_exact(inst, r);

  RatPoly pr = build_pr(r, inst.n());
  Rat per = eps / Rat(8 * inst.a.size());
  for (unsigned attempt = 0; attempt < 60; ++attempt) {
    Interval acc;
    for (std::size_t i = 1; i < inst.a.size(); ++i) {
      Interval ji = enclose_integral_series(pr, Rat(Int(i)), per);
      Interval ei = enclose_exp(Rat(Int(i)), per);
      acc = acc + Rat(inst.a[i]) * (ei * ji);
    }
    if (acc.width() <= eps) {
      res.interval = acc;
      return res;
    }
    per /= 16;
  }
  throw std::runtime_error("compute_Ar: enclosure refinement did not reach eps");
}

// The unconditional identity A_r + B_r = P * I_r, as exact equality in the
// ExpNumber ring.
inline Verdict check_decomposition(const HilbertInstance& inst, unsigned r)
{
  ExpNumber lhs = compute_Ar_exact(inst, r) + ExpNumber(compute_Br(inst, r));
  Rat ir = euler_eval(build_pr(r, inst.n()));
  ExpNumber rhs = inst.combination() * ir;
  if (lhs == rhs)
    return Verdict::pass("A_r + B_r equals P * I_r exactly");
  return Verdict::fail("A_r + B_r differs from P * I_r");
}

struct ArBoundResult {
  Verdict verdict;
  Int l = 0;          // coefficient scale of the root product, plus one
  Int monomial_count; // (n+1)(r+1)
  Int c = 1;          // least integer with |A_r| <= c^r on this r
  std::string detail;
};

// Explicit exponential-in-r bound on A_r: every inner integral obeys
// |J_i| <= (n+1)(r+1) l^{r+1} n^{(n+1)(r+1)} e^n, hence
// |A_r| <= sum_i |a_i| e^i times that, and a small integer c with
// |A_r| <= c^r is derived from the certified enclosure.
inline ArBoundResult check_Ar_bound(const HilbertInstance& inst, unsigned r, const Rat& eps)
{
  const unsigned n = inst.n();
  ArBoundResult res;

  RatPoly g = RatPoly::constant(Rat(1));
  for (unsigned j = 1; j <= n; ++j)
    g = g * RatPoly(std::vector<Rat>{Rat(-Int(j)), Rat(1)});
  Int maxc = 0;
  for (const auto& c : g.coeffs())
    maxc = std::max(maxc, Int(boost::multiprecision::abs(num(c))));
  res.l = maxc + 1;
  res.monomial_count = Int(n + 1) * (r + 1);

  const Int mr = res.monomial_count * pow_int(res.l, r + 1) *
                 pow_int(Int(n), (n + 1) * (r + 1));
  RatPoly pr = build_pr(r, n);
  ExpPoly prim = ExpPoly::term(Rat(-1), lift(pr)).primitive();
  ExpNumber at0 = prim.value(Rat(0));

  for (std::size_t i = 0; i < inst.a.size(); ++i) {
    ExpNumber ji = prim.value(Rat(Int(i))) - at0;
    Status s = certify_le(
        [&](const Rat& e) { return abs(enclose(ji, e)); },
        [&](const Rat& e) { return Rat(mr) * enclose_exp(Rat(Int(n)), e); }, eps);
    if (s != Status::pass) {
      res.verdict = {s, "inner integral bound not certified at i=" + std::to_string(i)};
      return res;
    }
  }

  ExpNumber ar = compute_Ar_exact(inst, r);
  Status total = certify_le(
      [&](const Rat& e) { return abs(enclose(ar, e)); },
      [&](const Rat& e) {
        Interval sum;
        for (std::size_t i = 0; i < inst.a.size(); ++i)
          sum = sum + Rat(Int(boost::multiprecision::abs(inst.a[i]))) *
                          enclose_exp(Rat(Int(i)), e);
        return sum * (Rat(mr) * enclose_exp(Rat(Int(n)), e));
      },
      eps);
  if (total != Status::pass) {
    res.verdict = {total, "aggregate bound on |A_r| not certified"};
    return res;
  }

  Rat upper = abs(enclose(ar, eps)).hi();
  while (Rat(pow_int(res.c, r)) < upper) {
    ++res.c;
    if (res.c > 1000000)
      throw std::runtime_error("check_Ar_bound: runaway bound constant");
  }
  res.detail = "l=" + res.l.str() + ", certified |A_r| <= " + res.c.str() + "^r";
  res.verdict = Verdict::pass(res.detail);
  return res;
}

// Certified |integral over [0,i] of x^k Exp(-x)| <= i^{k+1} e^i.
inline Verdict check_exp_integral_bound(unsigned i, unsigned k, const Rat& eps)
{
  ExpNumber lhs = newton_integral(ExpPoly::monomial_exp(k, Rat(-1)), Rat(0), Rat(Int(i)));
  const Rat scale(pow_int(Int(i), k + 1));
  Status s = certify_le([&](const Rat& e) { return abs(enclose(lhs, e)); },
                        [&](const Rat& e) { return scale * enclose_exp(Rat(Int(i)), e); }, eps);
  switch (s) {
  case Status::pass:
    return Verdict::pass("bound certified for i=" + std::to_string(i) +
                         ", k=" + std::to_string(k));
  case Status::fail:
    return Verdict::fail("bound refuted for i=" + std::to_string(i) +
                         ", k=" + std::to_string(k));
  default:
    return Verdict::undecided("enclosures keep overlapping at i=" + std::to_string(i) +
                              ", k=" + std::to_string(k));
  }
}

struct EulerNumericResult {
  Verdict verdict;
  ImproperCheckResult convergence;
};

// Sequence-based confirmation that the integral over [0,inf) of
// x^k Exp(-x) is k!: the Newton integrals settle into k! on two point
// sequences, the inductive recurrence I_k = k * I_{k-1} holds exactly, and
// the boundary term b^k e^{-b} of the induction step provably shrinks
// below eps at the last point.
inline EulerNumericResult verify_euler_numeric(unsigned k, const std::vector<Rat>& points,
                                               const Rat& eps)
{
  EulerNumericResult res;
  ExpPoly fk = ExpPoly::monomial_exp(k, Rat(-1));
  res.convergence =
      numeric_improper_check(fk, Rat(0), ExpNumber(Rat(factorial(k))), points, eps);

  bool recurrence_ok = true;
  if (k > 0) {
    ExpNumber ik = improper_integral(fk, Rat(0));
    ExpNumber ik1 = improper_integral(ExpPoly::monomial_exp(k - 1, Rat(-1)), Rat(0));
    recurrence_ok = ik == Rat(Int(k)) * ik1;
  }

  const Rat& last = points.back();
  ExpNumber boundary = ExpNumber::e_pow(-last, pow_rat(last, k));
  bool boundary_small = abs(enclose(boundary, eps / 8)).hi() <= eps;

  if (res.convergence.pass && recurrence_ok && boundary_small)
    res.verdict = Verdict::pass("integrals settle into k!, recurrence and boundary term agree");
  else if (!res.convergence.pass)
    res.verdict = Verdict::fail("integrals do not settle into k!: " + res.convergence.detail);
  else if (!recurrence_ok)
    res.verdict = Verdict::fail("exact recurrence against k * I_{k-1} fails");
  else
    res.verdict = Verdict::fail("boundary term still above eps at the last point");
  return res;
}

struct HilbertReport {
  unsigned r = 0;
  Int B;
  Int B_residue; // modulo (r+1)!, normalized to [0, (r+1)!)
  ExpNumber Ar_exact;
  Interval Ar_interval;
  bool identity_ok = false;
  Rat bound_c;
};

inline HilbertReport hilbert_report(const HilbertInstance& inst, unsigned r, const Rat& eps)
{
  HilbertReport rep;
  rep.r = r;
  rep.B = compute_Br(inst, r);
  Int m = factorial(r + 1);
  rep.B_residue = ((rep.B % m) + m) % m;
  ArResult ar = compute_Ar(inst, r, eps);
  rep.Ar_exact = ar.exact;
  rep.Ar_interval = ar.interval;
  rep.identity_ok = check_decomposition(inst, r).ok();
  rep.bound_c = Rat(check_Ar_bound(inst, r, eps).c);
  return rep;
}

} // namespace fps

#endif
