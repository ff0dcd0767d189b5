#ifndef FPS_BBR_HPP
#define FPS_BBR_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fps/integers.hpp"
#include "fps/rational_series.hpp"
#include "fps/trunc_series.hpp"
#include "fps/verdict.hpp"

namespace fps {

// Data of the rationality argument: nonzero integer weights b_j against
// distinct natural exponents alpha_j, with u_n = sum b_j alpha_j^n and
// v_n = n! * sum_{r<=n} u_r/r!. The polynomial q(x) = prod (1 - alpha_j x)
// is written 1 - a_1 x - ... - a_t x^t.
struct BbrInstance {
  std::vector<Int> b;
  std::vector<Int> alpha;

  BbrInstance(std::vector<Int> b_, std::vector<Int> alpha_)
      : b(std::move(b_)), alpha(std::move(alpha_))
  {
    if (b.empty() || b.size() != alpha.size())
      throw std::invalid_argument("instance needs matching nonempty b and alpha lists");
    for (const auto& x : b)
      if (x == 0)
        throw std::invalid_argument("weights b_j must be nonzero");
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] < 1)
        throw std::invalid_argument("exponents alpha_j must be natural numbers");
      for (std::size_t j = i + 1; j < alpha.size(); ++j)
        if (alpha[i] == alpha[j])
          throw std::invalid_argument("exponents alpha_j must be distinct");
    }
  }

  unsigned t() const { return static_cast<unsigned>(b.size()); }

  Int max_alpha() const
  {
    Int m = alpha[0];
    for (const auto& a : alpha)
      m = std::max(m, a);
    return m;
  }

  RatPoly q_poly() const
  {
    RatPoly q = RatPoly::constant(Rat(1));
    for (const auto& a : alpha)
      q = q * RatPoly(std::vector<Rat>{Rat(1), Rat(-a)});
    return q;
  }

  // a_i with q(x) = 1 - a_1 x - ... - a_t x^t; index 0 unused.
  std::vector<Int> a_coeffs() const
  {
    RatPoly q = q_poly();
    std::vector<Int> a(t() + 1);
    for (unsigned i = 1; i <= t(); ++i)
      a[i] = -num(q.coeff(i));
    return a;
  }

  Int u_at(unsigned n) const
  {
    Int s = 0;
    for (std::size_t j = 0; j < b.size(); ++j)
      s += b[j] * pow_int(alpha[j], n);
    return s;
  }
};

// Row k holds v_n(k) = [x^n] q(x)^k V(x); row 0 is v itself.
struct VTable {
  unsigned N = 0, K = 0;
  std::vector<Int> u, v;
  std::vector<std::vector<Int>> vk;
};

// One more truncated multiplication by q(x) per row. Negative indices count
// as zero, so the convolution is clipped at the left edge.
inline std::vector<std::vector<Int>> vk_rows_from_sequence(const std::vector<Int>& v,
                                                           const std::vector<Int>& a, unsigned K)
{
  const std::size_t n1 = v.size();
  const unsigned t = static_cast<unsigned>(a.size()) - 1;
  std::vector<std::vector<Int>> rows(K + 1);
  rows[0] = v;
  for (unsigned k = 0; k < K; ++k) {
    rows[k + 1].resize(n1);
    for (std::size_t n = 0; n < n1; ++n) {
      Int s = rows[k][n];
      for (unsigned i = 1; i <= std::min<std::size_t>(t, n); ++i)
        s -= a[i] * rows[k][n - i];
      rows[k + 1][n] = s;
    }
  }
  return rows;
}

inline VTable build_vtable(const BbrInstance& inst, unsigned N, unsigned K)
{
  if (N < inst.t() * K)
    throw std::invalid_argument("build_vtable: need N >= t*K");
  VTable tab;
  tab.N = N;
  tab.K = K;
  tab.u.resize(N + 1);
  tab.v.resize(N + 1);

  std::vector<Int> apow(inst.alpha.size(), 1);
  for (unsigned n = 0; n <= N; ++n) {
    Int s = 0;
    for (std::size_t j = 0; j < inst.b.size(); ++j) {
      s += inst.b[j] * apow[j];
      apow[j] *= inst.alpha[j];
    }
    tab.u[n] = s;
    tab.v[n] = n == 0 ? s : Int(n) * tab.v[n - 1] + s;
  }
  tab.vk = vk_rows_from_sequence(tab.v, inst.a_coeffs(), K);
  return tab;
}

// v_n(k+1) = v_n(k) - a_1 v_{n-1}(k) - ... - a_t v_{n-t}(k) for n >= t.
inline Verdict check_vk_recurrence(const VTable& tab, const BbrInstance& inst)
{
  auto a = inst.a_coeffs();
  unsigned t = inst.t();
  for (unsigned k = 0; k < tab.K; ++k)
    for (unsigned n = t; n <= tab.N; ++n) {
      Int s = tab.vk[k][n];
      for (unsigned i = 1; i <= t; ++i)
        s -= a[i] * tab.vk[k][n - i];
      if (s != tab.vk[k + 1][n])
        return Verdict::fail("recurrence fails at k=" + std::to_string(k) +
                             ", n=" + std::to_string(n));
    }
  return Verdict::pass("recurrence holds for all n >= t, k < K");
}

// v_n = sum_{r<k} (n)_r u_{n-r} + (n)_k v_{n-k}, with negative indices as 0.
inline Verdict check_combination(const VTable& tab, unsigned k)
{
  for (unsigned n = 0; n <= tab.N; ++n) {
    Int rhs = 0;
    for (unsigned r = 0; r < k; ++r)
      if (n >= r)
        rhs += falling_factorial(Int(n), r) * tab.u[n - r];
    if (n >= k)
      rhs += falling_factorial(Int(n), k) * tab.v[n - k];
    if (rhs != tab.v[n])
      return Verdict::fail("combination identity fails at k=" + std::to_string(k) +
                           ", n=" + std::to_string(n));
  }
  return Verdict::pass("combination identity holds up to N");
}

// k! divides v_n(k) whenever n >= t k.
inline Verdict check_divisibility(const VTable& tab, const BbrInstance& inst)
{
  unsigned t = inst.t();
  for (unsigned k = 0; k <= tab.K; ++k) {
    Int kf = factorial(k);
    for (unsigned n = t * k; n <= tab.N; ++n)
      if (!divides(kf, tab.vk[k][n]))
        return Verdict::fail("k! does not divide v_n(k) at k=" + std::to_string(k) +
                             ", n=" + std::to_string(n));
  }
  return Verdict::pass("k! | v_n(k) on the whole window");
}

// Both constructions of v agree: the n-step recurrence and n! * sum u_r/r!.
inline Verdict check_dual_v_construction(const VTable& tab)
{
  Rat sum = 0;
  Int fact = 1;
  for (unsigned n = 0; n <= tab.N; ++n) {
    if (n > 0)
      fact *= n;
    sum += Rat(tab.u[n]) / Rat(fact);
    Rat vn = Rat(fact) * sum;
    if (den(vn) != 1 || num(vn) != tab.v[n])
      return Verdict::fail("factorial-sum construction differs at n=" + std::to_string(n));
  }
  return Verdict::pass("recurrence and factorial-sum constructions of v agree");
}

struct UrIdentityResult {
  Verdict verdict;
  RatPoly p_r;
};

// sum_n (n)_r u_{n-r} x^n multiplied by q(x)^{r+1} must close to an integer
// polynomial of degree < t(r+1); that polynomial is recovered and returned.
inline UrIdentityResult check_ur_identity(const BbrInstance& inst, unsigned r, unsigned N)
{
  unsigned t = inst.t();
  if (N < t * (r + 1) + r)
    throw std::invalid_argument("check_ur_identity: need N >= t(r+1)+r");

  std::vector<Rat> lhs(N + 1, Rat(0));
  for (unsigned n = r; n <= N; ++n)
    lhs[n] = Rat(falling_factorial(Int(n), r) * inst.u_at(n - r));
  TruncSeries series(std::move(lhs));
  TruncSeries product = TruncSeries::from_poly(inst.q_poly().pow(r + 1), N) * series;

  UrIdentityResult out;
  unsigned bound = t * (r + 1);
  std::vector<Rat> rec(bound, Rat(0));
  for (unsigned n = 0; n < bound; ++n)
    rec[n] = product.coeff_at(n);
  out.p_r = RatPoly(std::move(rec));

  for (unsigned n = bound; n <= N; ++n)
    if (product.coeff_at(n) != 0) {
      out.verdict = Verdict::fail("q^{r+1} * series is not polynomial: coefficient " +
                                  std::to_string(n) + " nonzero");
      return out;
    }
  for (const auto& c : out.p_r.coeffs())
    if (den(c) != 1) {
      out.verdict = Verdict::fail("recovered polynomial has a non-integer coefficient");
      return out;
    }
  out.verdict = Verdict::pass("polynomial of degree < t(r+1) recovered, integer coefficients");
  return out;
}

// (1-x)V(x) - x^2 V'(x) = sum_j b_j/(1 - alpha_j x), coefficient-wise: both
// sides carry v_n - n v_{n-1} = u_n.
inline Verdict check_ode_identity(const BbrInstance& inst, unsigned N)
{
  if (N < 2)
    throw std::invalid_argument("check_ode_identity: need N >= 2");
  VTable tab = build_vtable(inst, N, 0);

  std::vector<Rat> vc(N + 1);
  for (unsigned n = 0; n <= N; ++n)
    vc[n] = Rat(tab.v[n]);
  TruncSeries V(std::move(vc));
  TruncSeries Vp = V.derivative(); // horizon N-1

  TruncSeries one_minus_x = TruncSeries::from_poly(
      RatPoly(std::vector<Rat>{Rat(1), Rat(-1)}), N);
  TruncSeries x_sq = TruncSeries::from_poly(RatPoly::monomial(Rat(1), 2), N - 1);
  TruncSeries lhs = one_minus_x * V - x_sq * Vp; // horizon N-1

  RatFun rhs_fun;
  for (std::size_t j = 0; j < inst.b.size(); ++j)
    rhs_fun = rhs_fun + RatFun::pole_term(Rat(inst.b[j]), Rat(inst.alpha[j]));
  TruncSeries rhs = rhs_fun.expand(N - 1);

  if (!(lhs == rhs)) {
    for (unsigned n = 0; n + 1 <= N; ++n)
      if (lhs.coeff_at(n) != rhs.coeff_at(n))
        return Verdict::fail("series differ first at coefficient " + std::to_string(n));
  }
  return Verdict::pass("(1-x)V - x^2 V' matches sum b_j/(1-alpha_j x) to horizon N-1");
}

struct NormInductionResult {
  bool all_zero = false;
  std::optional<std::pair<unsigned, unsigned>> witness; // (k, n) with oracle false
  unsigned long window_size = 0;                        // examined pairs of M
  unsigned long marked = 0;                             // pairs established zero
  std::string detail;
};

// Replay of the norm induction over the set M = {k >= k0, n >= 2tk} with
// norm n - 2tk, using the modified recurrence
//   v_n(k) = v_n(k+1) + a_1 v_{n-1}(k) + ... + a_t v_{n-t}(k).
// Pairs in the base band N = {tk <= n <= 2tk} are settled by the
// zero_oracle; interior pairs are marked zero when all their dependencies
// are. The examined window is the part of M whose whole dependency cone
// stays inside the table, and the verdict says whether all of it was
// marked. A consistency cross-check against the actual table values guards
// the replay itself.
inline NormInductionResult
norm_induction(const std::vector<std::vector<Int>>& vk, unsigned t, unsigned k0,
               const std::function<bool(unsigned, unsigned)>& zero_oracle)
{
  if (t == 0 || k0 == 0)
    throw std::invalid_argument("norm_induction: t and k0 must be positive");
  const unsigned K = static_cast<unsigned>(vk.size()) - 1;
  const unsigned N = static_cast<unsigned>(vk.at(0).size()) - 1;

  NormInductionResult res;
  enum class Mark : unsigned char { outside, unknown, zero, nonzero };
  // state[k][n] for base-band pairs; interior handled by norm sweeps
  std::vector<std::vector<Mark>> state(K + 1, std::vector<Mark>(N + 1, Mark::outside));
  std::vector<std::vector<bool>> in_cone(K + 1, std::vector<bool>(N + 1, false));

  auto in_base = [&](unsigned k, unsigned n) {
    return k >= k0 && t * k <= n && n <= 2 * t * k;
  };
  auto in_interior = [&](unsigned k, unsigned n) { return k >= k0 && n > 2 * t * k; };

  for (unsigned k = k0; k <= K; ++k)
    for (unsigned n = 0; n <= N; ++n) {
      if (in_base(k, n)) {
        bool z = zero_oracle(k, n);
        state[k][n] = z ? Mark::zero : Mark::nonzero;
        in_cone[k][n] = true;
        if (!z && !res.witness)
          res.witness = {k, n};
        if (n == 2 * t * k) { // boundary pairs belong to M as well
          ++res.window_size;
          if (z)
            ++res.marked;
        }
      } else if (in_interior(k, n)) {
        state[k][n] = Mark::unknown;
      }
    }

  // Ascending norm: dependencies of an interior pair all have smaller norm,
  // so one sweep per norm value settles everything reachable.
  long max_norm = static_cast<long>(N) - 2 * static_cast<long>(t) * k0;
  for (long norm = 1; norm <= max_norm; ++norm) {
    for (unsigned k = k0; k <= K; ++k) {
      long n_l = norm + 2 * static_cast<long>(t) * k;
      if (n_l > static_cast<long>(N))
        continue;
      unsigned n = static_cast<unsigned>(n_l);
      if (!in_interior(k, n))
        continue;
      if (k + 1 > K) // dependency row above the table: outside the cone
        continue;
      bool cone = in_cone[k + 1][n];
      bool zero = state[k + 1][n] == Mark::zero;
      for (unsigned i = 1; i <= t && cone; ++i) {
        cone = cone && in_cone[k][n - i];
        zero = zero && state[k][n - i] == Mark::zero;
      }
      if (!cone)
        continue;
      in_cone[k][n] = true;
      ++res.window_size;
      if (zero) {
        state[k][n] = Mark::zero;
        ++res.marked;
        if (vk[k][n] != 0)
          throw std::logic_error("norm induction marked a nonzero table entry");
      }
    }
  }

  res.all_zero = res.marked == res.window_size;
  res.detail = res.all_zero
                   ? "entire examined M-window of " + std::to_string(res.window_size) +
                         " pairs is zero"
                   : (res.witness
                          ? "nonzero base-band witness v_" + std::to_string(res.witness->second) +
                                "(" + std::to_string(res.witness->first) + ")"
                          : "induction could not mark the whole window");
  return res;
}

inline NormInductionResult norm_induction(const std::vector<std::vector<Int>>& vk, unsigned t,
                                          unsigned k0)
{
  return norm_induction(vk, t, k0,
                        [&vk](unsigned k, unsigned n) { return vk[k][n] == 0; });
}

struct GrowthResult {
  std::optional<unsigned> base_violation;            // first n with |v_n| > c A^n
  std::vector<std::pair<unsigned, unsigned>> violations; // (k, n) against c A^n C^k
  Rat c;

  // The bound is conditional on the base row; with a failing base the
  // implication holds vacuously.
  bool implication_holds() const { return base_violation ? true : violations.empty(); }
};

// Conditional growth bound |v_n(k)| <= c A^n C^k with C = 1 + sum |a_i|,
// checked as an implication from the base row's actual behavior.
inline GrowthResult check_growth_items(const VTable& tab, const BbrInstance& inst, const Rat& c)
{
  if (c < 0)
    throw std::invalid_argument("check_growth_items: c must be nonnegative");
  GrowthResult res;
  res.c = c;
  const Rat A(inst.max_alpha());
  Rat C = 1;
  auto a = inst.a_coeffs();
  for (unsigned i = 1; i <= inst.t(); ++i)
    C += Rat(Int(boost::multiprecision::abs(a[i])));

  Rat apow = 1;
  for (unsigned n = 0; n <= tab.N; ++n) {
    if (Rat(Int(boost::multiprecision::abs(tab.v[n]))) > c * apow) {
      res.base_violation = n;
      break;
    }
    apow *= A;
  }

  for (unsigned k = 0; k <= tab.K; ++k) {
    Rat bound_nk = c * pow_rat(C, k) * pow_rat(A, inst.t() * k);
    for (unsigned n = inst.t() * k; n <= tab.N; ++n) {
      if (Rat(Int(boost::multiprecision::abs(tab.vk[k][n]))) > bound_nk)
        res.violations.emplace_back(k, n);
      bound_nk *= A;
    }
  }
  return res;
}

// Largest |v_n|/A^n over the built window: a base constant that passes by
// construction.
inline Rat window_growth_constant(const VTable& tab, const BbrInstance& inst)
{
  const Rat A(inst.max_alpha());
  Rat best = 0, apow = 1;
  for (unsigned n = 0; n <= tab.N; ++n) {
    best = std::max(best, Rat(Rat(Int(boost::multiprecision::abs(tab.v[n]))) / apow));
    apow *= A;
  }
  return best;
}

// Least k0 with k! > c A^{2tk} C^k for every k >= k0. The ratio
// k!/(A^{2t}C)^k grows monotonically once k+1 > A^{2t} C, so the scan is
// finite and the answer covers all larger k.
inline unsigned least_k0(const Rat& c, unsigned t, const Rat& A, const Rat& C,
                         unsigned cap = 200000)
{
  const Rat growth = pow_rat(A, 2 * t) * C;
  Int kf = 1;
  unsigned last_false = 0;
  for (unsigned k = 1; k <= cap; ++k) {
    kf *= k;
    bool holds = Rat(kf) > c * pow_rat(growth, k);
    if (!holds)
      last_false = k;
    if (holds && Rat(k + 1) > growth)
      return last_false + 1;
  }
  throw std::runtime_error("least_k0: scan cap exceeded");
}

} // namespace fps

#endif
