#ifndef FPS_RATIONAL_SERIES_HPP
#define FPS_RATIONAL_SERIES_HPP

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fps/errors.hpp"
#include "fps/polynomial.hpp"
#include "fps/trunc_series.hpp"
#include "fps/verdict.hpp"

namespace fps {

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  RatPoly q, r = a;
  const Rat lead = b.coeff(static_cast<unsigned>(b.degree()));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
    Rat factor = r.coeff(static_cast<unsigned>(r.degree())) / lead;
    RatPoly t = RatPoly::monomial(factor, shift);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

inline RatPoly exact_div(const RatPoly& a, const RatPoly& b)
{
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

// Euclidean gcd, normalized so that g(0) = 1 when the constant term is
// nonzero (monic otherwise).
inline RatPoly poly_gcd(RatPoly a, RatPoly b)
{
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = b;
    if (!r.is_zero())
      r.scale(1 / r.coeff(static_cast<unsigned>(r.degree())));
    b = r;
  }
  if (a.is_zero())
    return a;
  Rat c0 = a.coeff(0);
  a.scale(c0 != 0 ? 1 / c0 : 1 / a.coeff(static_cast<unsigned>(a.degree())));
  return a;
}

// Rational formal power series p(x)/q(x), kept with q(0) = 1 and p, q
// coprime. q(0) != 0 is what makes the quotient a power series at all.
class RatFun {
public:
  RatFun() : num_(), den_(RatPoly::constant(Rat(1))) {}
  explicit RatFun(RatPoly p) : num_(std::move(p)), den_(RatPoly::constant(Rat(1))) {}

  RatFun(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den))
  {
    if (den_.is_zero() || den_.coeff(0) == 0)
      throw std::invalid_argument("RatFun denominator must not vanish at 0");
    if (num_.is_zero()) {
      den_ = RatPoly::constant(Rat(1));
      return;
    }
    RatPoly g = poly_gcd(num_, den_);
    if (g.degree() >= 1) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    Rat c0 = den_.coeff(0);
    if (c0 != 1) {
      den_.scale(1 / c0);
      num_.scale(1 / c0);
    }
  }

  // b/(1 - alpha*x)^order
  static RatFun pole_term(const Rat& b, const Rat& alpha, unsigned order = 1)
  {
    RatPoly lin(std::vector<Rat>{Rat(1), -alpha});
    return RatFun(RatPoly::constant(b), lin.pow(order));
  }

  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RatFun operator+(const RatFun& a, const RatFun& b)
  {
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RatFun operator-(const RatFun& a, const RatFun& b)
  {
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RatFun operator*(const RatFun& a, const RatFun& b)
  {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
  }

  RatFun derivative() const
  {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  bool operator==(const RatFun& o) const
  {
    return num_ * o.den_ == o.num_ * den_;
  }

  // Exact coefficients 0..N by long division against the denominator.
  TruncSeries expand(unsigned N) const
  {
    std::vector<Rat> s(N + 1, Rat(0));
    unsigned t = static_cast<unsigned>(den_.degree());
    for (unsigned n = 0; n <= N; ++n) {
      Rat acc = num_.coeff(n);
      for (unsigned k = 1; k <= std::min(n, t); ++k)
        acc -= den_.coeff(k) * s[n - k];
      s[n] = acc; // den(0) = 1
    }
    return TruncSeries(std::move(s));
  }

private:
  RatPoly num_, den_;
};

namespace detail {

inline std::vector<Int> divisors_of(Int n, std::size_t cap = 1 << 16)
{
  n = boost::multiprecision::abs(n);
  std::vector<std::pair<Int, unsigned>> factors;
  for (Int p = 2; p * p <= n && p < 1000000; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.emplace_back(p, e);
    }
  }
  if (n > 1)
    factors.emplace_back(n, 1); // leftover cofactor, treated as prime
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factors) {
    std::size_t sz = divs.size();
    Int pe = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < sz; ++j) {
        divs.push_back(divs[j] * pe);
        if (divs.size() > cap)
          throw IrreducibleFactorError("candidate divisor enumeration overflow");
      }
    }
  }
  return divs;
}

// Exact solve of a square system by Gaussian elimination; the systems we
// build are nonsingular by the uniqueness of partial fractions.
inline std::vector<Rat> linsolve(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs)
{
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::logic_error("linsolve: singular system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0)
        continue;
      Rat f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k)
        m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  std::vector<Rat> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = rhs[i] / m[i][i];
  return x;
}

} // namespace detail

// Factor a denominator with q(0) = 1 into (1 - alpha x)^m factors with
// rational alpha. The reversed polynomial x^deg * q(1/x) is monic with the
// alphas as roots, so the rational-root theorem applies directly to it.
inline std::vector<std::pair<Rat, unsigned>> factor_unit_denominator(const RatPoly& q)
{
  if (q.is_zero() || q.coeff(0) != 1)
    throw std::invalid_argument("factor_unit_denominator: constant term must be 1");
  int deg = q.degree();
  if (deg == 0)
    return {};

  std::vector<Rat> rev(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i <= deg; ++i)
    rev[static_cast<std::size_t>(i)] = q.coeff(static_cast<unsigned>(deg - i));
  RatPoly r(std::move(rev)); // monic, roots are the alphas

  Int lcm = 1;
  for (const auto& c : r.coeffs())
    lcm = boost::multiprecision::lcm(lcm, den(c));
  Int p0 = num(r.coeff(0) * Rat(lcm));
  if (p0 == 0)
    throw std::logic_error("factor_unit_denominator: zero alpha");

  std::vector<Rat> candidates;
  for (const auto& rnum : detail::divisors_of(p0))
    for (const auto& rden : detail::divisors_of(lcm)) {
      Rat c(rnum, rden);
      candidates.push_back(c);
      candidates.push_back(-c);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::pair<Rat, unsigned>> factors;
  for (const auto& alpha : candidates) {
    unsigned mult = 0;
    while (!r.is_zero() && r.degree() >= 1 && r.eval(alpha) == 0) {
      RatPoly lin(std::vector<Rat>{-alpha, Rat(1)});
      r = exact_div(r, lin);
      ++mult;
    }
    if (mult > 0)
      factors.emplace_back(alpha, mult);
  }
  if (r.degree() >= 1)
    throw IrreducibleFactorError("denominator has a factor without rational roots");
  std::sort(factors.begin(), factors.end());
  return factors;
}

struct PfTerm {
  Rat alpha;
  unsigned order; // exponent i in beta/(1 - alpha x)^i
  Rat beta;
};

struct PartialFractions {
  RatPoly poly_part;
  std::vector<PfTerm> terms; // sorted by (alpha, order); only nonzero betas kept

  // Pole of the series at 1/alpha with the maximal order per alpha.
  std::map<Rat, unsigned> pole_orders() const
  {
    std::map<Rat, unsigned> m;
    for (const auto& t : terms)
      m[t.alpha] = std::max(m[t.alpha], t.order);
    return m;
  }

  RatFun recombine() const
  {
    RatFun acc(poly_part);
    for (const auto& t : terms)
      acc = acc + RatFun::pole_term(t.beta, t.alpha, t.order);
    return acc;
  }
};

// Unique decomposition r(x) + sum_j sum_i beta_{j,i}/(1-alpha_j x)^i. The
// betas come from one exact linear solve against the basis den/(1-ax)^i.
inline PartialFractions partial_fractions(const RatFun& f)
{
  PartialFractions out;
  auto [quot, rem] = divmod(f.num(), f.den());
  out.poly_part = quot;
  if (rem.is_zero())
    return out;

  auto factors = factor_unit_denominator(f.den());
  unsigned D = static_cast<unsigned>(f.den().degree());

  std::vector<std::pair<Rat, unsigned>> index; // (alpha, order) per unknown
  std::vector<RatPoly> basis;
  for (const auto& [alpha, mult] : factors) {
    RatPoly lin(std::vector<Rat>{Rat(1), -alpha});
    RatPoly e = f.den();
    for (unsigned i = 1; i <= mult; ++i) {
      e = exact_div(e, lin);
      index.emplace_back(alpha, i);
      basis.push_back(e);
    }
  }

  std::vector<std::vector<Rat>> m(D, std::vector<Rat>(D, Rat(0)));
  std::vector<Rat> rhs(D, Rat(0));
  for (unsigned row = 0; row < D; ++row) {
    for (unsigned col = 0; col < D; ++col)
      m[row][col] = basis[col].coeff(row);
    rhs[row] = rem.coeff(row);
  }
  std::vector<Rat> beta = detail::linsolve(std::move(m), std::move(rhs));

  for (unsigned i = 0; i < D; ++i)
    if (beta[i] != 0)
      out.terms.push_back({index[i].first, index[i].second, beta[i]});
  return out;
}

struct PolePropResult {
  Verdict verdict;
  bool result_polynomial = false;
  std::vector<std::pair<Rat, unsigned>> result_poles;     // (alpha, order)
  std::vector<std::pair<Rat, unsigned>> derivative_poles; // poles of c x^m A'
};

// For rational A and the combination p(x)A(x) + c x^m A'(x): the result is
// a polynomial or every pole has order >= 2, and when A has poles at all
// the pole multiset of the result equals that of c x^m A'.
inline PolePropResult check_pole_prop(const RatPoly& p, unsigned m, const Rat& c,
                                      const RatFun& A)
{
  if (c == 0)
    throw std::invalid_argument("check_pole_prop: c must be nonzero");
  PolePropResult res;
  RatFun dterm = RatFun(RatPoly::monomial(c, m)) * A.derivative();
  RatFun sum = RatFun(p) * A + dterm;
  res.result_polynomial = sum.is_polynomial();

  if (A.is_polynomial()) {
    res.verdict = res.result_polynomial
                      ? Verdict::pass("result is a polynomial")
                      : Verdict::fail("polynomial A produced a non-polynomial result");
    return res;
  }

  if (!res.result_polynomial)
    for (const auto& [alpha, order] : partial_fractions(sum).pole_orders())
      res.result_poles.emplace_back(alpha, order);
  for (const auto& [alpha, order] : partial_fractions(dterm).pole_orders())
    res.derivative_poles.emplace_back(alpha, order);

  for (const auto& [alpha, order] : res.result_poles) {
    if (order < 2) {
      res.verdict = Verdict::fail("pole at 1/(" + to_string(alpha) + ") has order 1");
      return res;
    }
  }
  if (res.derivative_poles != res.result_poles) {
    res.verdict = Verdict::fail("pole multiset differs from that of c x^m A'");
    return res;
  }
  res.verdict = Verdict::pass("all pole orders >= 2, multiset matches c x^m A'");
  return res;
}

} // namespace fps

#endif
