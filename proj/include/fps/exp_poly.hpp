#ifndef FPS_EXP_POLY_HPP
#define FPS_EXP_POLY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fps/errors.hpp"
#include "fps/exp_number.hpp"
#include "fps/interval.hpp"
#include "fps/polynomial.hpp"
#include "fps/trunc_series.hpp"

namespace fps {

// Finite sum of parts p_c(x)*Exp(c*x), keyed by the rational rate c, with
// ExpNumber polynomial coefficients. The class is closed under products,
// derivatives, antiderivatives, shifts and inner scalings, so every
// operation on it is exact; no truncation or convergence bookkeeping enters.
// The plain exponential Exp is the single part {1 -> 1}; a polynomial sits
// at rate 0.
class ExpPoly {
public:
  ExpPoly() = default;

  static ExpPoly from_poly(EPoly p)
  {
    ExpPoly f;
    f.add_part(Rat(0), std::move(p));
    return f;
  }

  static ExpPoly from_poly(const RatPoly& p) { return from_poly(lift(p)); }

  static ExpPoly constant(const Rat& v) { return from_poly(RatPoly::constant(v)); }

  // Exp(rate*x).
  static ExpPoly exponential(const Rat& rate = Rat(1))
  {
    ExpPoly f;
    f.add_part(rate, EPoly::constant(ExpNumber(Rat(1))));
    return f;
  }

  // x^k * Exp(rate*x).
  static ExpPoly monomial_exp(unsigned k, const Rat& rate)
  {
    ExpPoly f;
    f.add_part(rate, EPoly::monomial(ExpNumber(Rat(1)), k));
    return f;
  }

  static ExpPoly term(const Rat& rate, EPoly p)
  {
    ExpPoly f;
    f.add_part(rate, std::move(p));
    return f;
  }

  bool is_zero() const { return parts_.empty(); }
  const std::map<Rat, EPoly>& parts() const { return parts_; }

  ExpPoly& operator+=(const ExpPoly& o)
  {
    for (const auto& [c, p] : o.parts_)
      add_part(c, p);
    return *this;
  }

  ExpPoly& operator-=(const ExpPoly& o)
  {
    for (const auto& [c, p] : o.parts_)
      add_part(c, -p);
    return *this;
  }

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator-(const ExpPoly& a)
  {
    ExpPoly r;
    for (const auto& [c, p] : a.parts_)
      r.parts_.emplace(c, -p);
    return r;
  }

  // Exp(ax)*Exp(bx) = Exp((a+b)x): rates add under multiplication.
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b)
  {
    ExpPoly r;
    for (const auto& [ca, pa] : a.parts_)
      for (const auto& [cb, pb] : b.parts_)
        r.add_part(ca + cb, pa * pb);
    return r;
  }

  ExpPoly scaled(const ExpNumber& s) const
  {
    ExpPoly r;
    for (const auto& [c, p] : parts_)
      r.add_part(c, p.scaled(s));
    return r;
  }

  ExpPoly scaled(const Rat& s) const { return scaled(ExpNumber(s)); }

  // Product rule per part: (p*Exp(cx))' = (p' + c*p)*Exp(cx).
  ExpPoly derivative() const
  {
    ExpPoly r;
    for (const auto& [c, p] : parts_)
      r.add_part(c, p.derivative() + p.scaled(ExpNumber(c)));
    return r;
  }

  // Exact antiderivative, normalized to vanish at 0 like the formal
  // primitive. For a part with rate c != 0 the polynomial q with
  // (q*Exp(cx))' = p*Exp(cx), i.e. q' + c*q = p, is found by
  // descending-degree back-substitution; the rate-0 part integrates as a
  // polynomial. The constant fixing the value at 0 lands at rate 0.
  ExpPoly primitive() const
  {
    ExpPoly r;
    for (const auto& [c, p] : parts_) {
      if (c == 0) {
        r.add_part(Rat(0), p.primitive());
      } else {
        int d = p.degree();
        std::vector<ExpNumber> q(static_cast<std::size_t>(d) + 1);
        for (int j = d; j >= 0; --j) {
          ExpNumber rhs = p.coeff(static_cast<unsigned>(j));
          if (j < d)
            rhs -= q[static_cast<std::size_t>(j) + 1] * Rat(Int(j + 1));
          q[static_cast<std::size_t>(j)] = rhs / c;
        }
        r.add_part(c, EPoly(std::move(q)));
      }
    }
    ExpNumber at0 = r.value(Rat(0));
    r.add_part(Rat(0), EPoly::constant(-at0));
    return r;
  }

  // f(x+b): each part becomes p(x+b) * e^{cb} * Exp(cx), exactly.
  ExpPoly shift(const Rat& b) const
  {
    ExpPoly r;
    for (const auto& [c, p] : parts_)
      r.add_part(c, p.compose_shift(b).scaled(ExpNumber::e_pow(c * b)));
    return r;
  }

  // f(ax): rate c -> a*c and p(x) -> p(ax).
  ExpPoly inner_scale(const Rat& a) const
  {
    ExpPoly r;
    for (const auto& [c, p] : parts_)
      r.add_part(a * c, p.inner_scale(a));
    return r;
  }

  // Point value sum p_c(v) * e^{cv}, exact in the ExpNumber ring.
  ExpNumber value(const Rat& v) const
  {
    ExpNumber acc;
    for (const auto& [c, p] : parts_)
      acc += p.eval(v) * ExpNumber::e_pow(c * v);
    return acc;
  }

  bool operator==(const ExpPoly& o) const { return parts_ == o.parts_; }

private:
  void add_part(const Rat& rate, EPoly p)
  {
    if (p.is_zero())
      return;
    auto [it, inserted] = parts_.try_emplace(rate, std::move(p));
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero())
        parts_.erase(it);
    }
  }

  std::map<Rat, EPoly> parts_;
};

// Difference of primitive values at the endpoints.
inline ExpNumber newton_integral(const ExpPoly& f, const Rat& u, const Rat& v)
{
  ExpPoly p = f.primitive();
  return p.value(v) - p.value(u);
}

// Integral from u to +infinity. Exists in this algebra exactly when every
// part decays, i.e. every rate is negative; then each q_c(x)e^{cx} in the
// primitive tends to 0 and the limit is the primitive's rate-0 constant.
inline ExpNumber improper_integral(const ExpPoly& f, const Rat& u)
{
  for (const auto& [c, p] : f.parts())
    if (c >= 0)
      throw DivergentIntegralError("improper integral requires all rates negative, found rate " +
                                   to_string(c));
  ExpPoly prim = f.primitive();
  ExpNumber limit;
  auto it = prim.parts().find(Rat(0));
  if (it != prim.parts().end())
    limit = it->second.coeff(0);
  return limit - prim.value(u);
}

// Integral over [0, +infinity) of p(x)*Exp(-x): each monomial b_j x^j
// contributes b_j * j!.
inline Rat euler_eval(const RatPoly& p)
{
  Rat acc = 0;
  Int f = 1;
  for (int j = 0; j <= p.degree(); ++j) {
    if (j > 0)
      f *= j;
    acc += p.coeff(static_cast<unsigned>(j)) * Rat(f);
  }
  return acc;
}

// Exact series coefficients [x^0..x^N] of f: coefficient n of
// p_c(x)*Exp(cx) is sum_j p_{c,j} c^{n-j}/(n-j)!.
inline std::vector<ExpNumber> series_coefficients(const ExpPoly& f, unsigned N)
{
  std::vector<Int> fact(N + 1);
  fact[0] = 1;
  for (unsigned n = 1; n <= N; ++n)
    fact[n] = fact[n - 1] * n;

  std::vector<ExpNumber> out(N + 1);
  for (const auto& [c, p] : f.parts()) {
    std::vector<Rat> cpow(N + 1);
    cpow[0] = 1;
    for (unsigned n = 1; n <= N; ++n)
      cpow[n] = cpow[n - 1] * c;
    for (unsigned n = 0; n <= N; ++n) {
      unsigned jmax = std::min<unsigned>(n, static_cast<unsigned>(std::max(p.degree(), 0)));
      for (unsigned j = 0; j <= jmax; ++j)
        out[n] += p.coeff(j) * (cpow[n - j] / Rat(fact[n - j]));
    }
  }
  return out;
}

// Interval view of the series coefficients, each of width <= eps.
inline std::vector<Interval> to_interval_series(const ExpPoly& f, unsigned N, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("to_interval_series: eps must be positive");
  std::vector<Interval> out;
  out.reserve(N + 1);
  for (const auto& c : series_coefficients(f, N))
    out.push_back(enclose(c, eps));
  return out;
}

// Exact truncated series; valid only when all scalars are rational.
inline TruncSeries to_series(const ExpPoly& f, unsigned N)
{
  std::vector<Rat> c;
  c.reserve(N + 1);
  for (const auto& v : series_coefficients(f, N))
    c.push_back(v.rational_value());
  return TruncSeries(std::move(c));
}

// Enclosure of f(v) computed by interval arithmetic over the parts (interval
// Horner per polynomial, times an enclosure of e^{cv}), independent of the
// exact ExpNumber evaluation path.
inline Interval interval_value(const ExpPoly& f, const Rat& v, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("interval_value: eps must be positive");
  Interval acc;
  for (const auto& [c, p] : f.parts()) {
    Interval horner;
    for (int j = p.degree(); j >= 0; --j)
      horner = horner * Interval(v) + enclose(p.coeff(static_cast<unsigned>(j)), eps);
    acc = acc + horner * enclose_exp(c * v, eps);
  }
  return acc;
}

// Certified enclosure of the integral over [0, v] of p(x)*Exp(-x) computed
// from the series expansion alone (no closed-form antiderivative), for
// v >= 0. The integrand's coefficient magnitudes obey
// |c_n| <= (sum_j |p_j|)/(n-d)!, which gives the tail majorant
//   sum_{n>m} |c_n| v^{n+1}/(n+1) <= P1 * v^{d+1} * tail_exp(v, m-d)
// with the same geometric tail bound used for e^v.
inline Interval enclose_integral_series(const RatPoly& p, const Rat& v, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("enclose_integral_series: eps must be positive");
  if (v < 0)
    throw std::invalid_argument("enclose_integral_series: negative endpoint");
  if (p.is_zero() || v == 0)
    return Interval(Rat(0));

  const unsigned d = static_cast<unsigned>(p.degree());
  Rat p1 = 0;
  for (unsigned j = 0; j <= d; ++j)
    p1 += boost::multiprecision::abs(p.coeff(j));
  const Rat vd1 = pow_rat(v, d + 1);

  std::vector<Int> fact{1};
  std::vector<Rat> vpow{Rat(1)};
  auto grow = [&](unsigned upto) {
    while (fact.size() <= upto) {
      fact.push_back(fact.back() * Int(fact.size()));
      vpow.push_back(vpow.back() * v);
    }
  };

  Rat sum = 0;
  for (unsigned n = 0;; ++n) {
    grow(n + 1);
    Rat cn = 0;
    for (unsigned j = 0; j <= std::min(n, d); ++j) {
      Rat term = p.coeff(j) / Rat(fact[n - j]);
      cn += ((n - j) % 2 == 0) ? term : -term;
    }
    sum += cn * vpow[n + 1] / Rat(n + 1);

    if (n >= d) {
      unsigned m = n - d; // tail of sum v^s/s! for s > m
      if (Rat(m + 2) > v) {
        Rat t = vpow[m + 1] / Rat(fact[m + 1]);
        Rat tail = p1 * vd1 * (t / (1 - v / (m + 2)));
        if (tail <= eps / 2)
          return {sum - tail, sum + tail};
      }
    }
  }
}

// Empirical convergence report for the sequence definition of the improper
// integral: do the Newton integrals from u to b eventually stay within eps
// of the claimed value? Run on the given points and on a second derived
// sequence (scaled by 7/5) to exercise sequence independence.
struct StaySequenceReport {
  std::vector<Rat> points;
  std::vector<bool> within;
  long first_stay = -1; // index from which all tail points are within
  bool pass = false;
};

struct ImproperCheckResult {
  bool pass = false;
  StaySequenceReport primary, alternate;
  std::string detail;
};

inline ImproperCheckResult numeric_improper_check(const ExpPoly& f, const Rat& u,
                                                  const ExpNumber& claimed,
                                                  const std::vector<Rat>& points, const Rat& eps)
{
  if (points.empty())
    throw std::invalid_argument("numeric_improper_check: empty point list");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i] <= points[i - 1])
      throw std::invalid_argument("numeric_improper_check: points must be strictly increasing");
  if (eps <= 0)
    throw std::invalid_argument("numeric_improper_check: eps must be positive");

  ExpPoly prim = f.primitive();
  ExpNumber base = prim.value(u);

  auto run = [&](const std::vector<Rat>& pts) {
    StaySequenceReport rep;
    rep.points = pts;
    rep.within.reserve(pts.size());
    for (const auto& b : pts) {
      ExpNumber diff = prim.value(b) - base - claimed;
      Interval d = abs(enclose(diff, eps / 8));
      bool ok = d.hi() <= eps;
      if (!ok && d.lo() <= eps) {
        d = abs(enclose(diff, eps / 512));
        ok = d.hi() <= eps;
      }
      rep.within.push_back(ok);
    }
    long stay = -1;
    for (long i = static_cast<long>(pts.size()) - 1; i >= 0; --i) {
      if (!rep.within[static_cast<std::size_t>(i)])
        break;
      stay = i;
    }
    rep.first_stay = stay;
    rep.pass = stay >= 0;
    return rep;
  };

  ImproperCheckResult res;
  res.primary = run(points);
  std::vector<Rat> alt;
  alt.reserve(points.size());
  for (const auto& b : points)
    alt.push_back(b * Rat(7, 5));
  res.alternate = run(alt);
  res.pass = res.primary.pass && res.alternate.pass;
  res.detail = res.pass
                   ? "stays within eps from index " + std::to_string(res.primary.first_stay) +
                         " (primary) / " + std::to_string(res.alternate.first_stay) + " (alternate)"
                   : "integrals do not settle within eps of the claimed value";
  return res;
}

} // namespace fps

#endif
