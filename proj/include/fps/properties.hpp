#ifndef FPS_PROPERTIES_HPP
#define FPS_PROPERTIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "fps/bbr.hpp"
#include "fps/exp_poly.hpp"
#include "fps/random.hpp"
#include "fps/rational_series.hpp"

namespace fps {

struct SuiteResult {
  std::string name;
  std::string law; // short tag of the identity being exercised
  unsigned cases = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline SuiteResult run_cases(std::string name, std::string law, std::uint64_t seed,
                             unsigned cases,
                             const std::function<bool(RandomSource&, std::string&)>& one)
{
  SuiteResult res{std::move(name), std::move(law), cases, {}};
  // Per-suite stream: independent of the order suites run in.
  RandomSource rs(seed * 0x9e3779b97f4a7c15ull + fnv1a(res.name));
  for (unsigned i = 0; i < cases; ++i) {
    std::string why;
    if (!one(rs, why))
      res.failures.push_back("case " + std::to_string(i) + ": " + why);
  }
  return res;
}

} // namespace detail

// ---- series_core laws ----------------------------------------------------

inline SuiteResult suite_series_ring(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases("series-ring-laws", "ring-axioms", seed, cases,
                           [](RandomSource& rs, std::string& why) {
                             TruncSeries f = rs.series(8), g = rs.series(8), h = rs.series(8);
                             if (!((f + g) * h == f * h + g * h)) {
                               why = "distributivity";
                               return false;
                             }
                             if (!(f * g == g * f) || !((f * g) * h == f * (g * h))) {
                               why = "commutativity/associativity";
                               return false;
                             }
                             return true;
                           });
}

inline SuiteResult suite_series_leibniz(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "series-leibniz", "product-rule", seed, cases, [](RandomSource& rs, std::string& why) {
        TruncSeries f = rs.series(8), g = rs.series(8);
        TruncSeries lhs = (f * g).derivative();
        TruncSeries rhs = f.derivative() * g + f * g.derivative();
        if (!(lhs == rhs)) {
          why = "(fg)' != f'g + fg'";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_series_inner(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "series-inner-product", "inner-scale-laws", seed, cases,
      [](RandomSource& rs, std::string& why) {
        TruncSeries f = rs.series(8), g = rs.series(8);
        Rat a = rs.nonzero_rational(3, 2), c = rs.rational(3, 2);
        // chain rule f(ax)' = a f'(ax)
        if (!(f.inner_scale(a).derivative() == f.derivative().inner_scale(a).scaled(a))) {
          why = "chain rule";
          return false;
        }
        if (!((f * g).inner_scale(c) == f.inner_scale(c) * g.inner_scale(c))) {
          why = "(fg)(cx) != f(cx) g(cx)";
          return false;
        }
        if (!(f.inner_scale(a).primitive() == f.primitive().inner_scale(a).scaled(1 / a))) {
          why = "primitive of f(ax) != (1/a)(primitive f)(ax)";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_series_derivative_primitive(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "series-derivative-primitive", "fundamental-laws", seed, cases,
      [](RandomSource& rs, std::string& why) {
        TruncSeries f = rs.series(8);
        if (!(f.primitive().derivative() == f)) {
          why = "derivative of primitive is not the identity";
          return false;
        }
        TruncSeries back = f.derivative().primitive();
        TruncSeries expect = f - TruncSeries::constant(f.coeff_at(0), f.horizon());
        if (!(back == expect)) {
          why = "primitive of derivative != f - [x^0]f";
          return false;
        }
        return true;
      });
}

// ---- exactnum laws -------------------------------------------------------

inline SuiteResult suite_enum_ring(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases("enum-ring-laws", "ring-axioms", seed, cases,
                           [](RandomSource& rs, std::string& why) {
                             ExpNumber a = rs.exp_number(3), b = rs.exp_number(3),
                                       c = rs.exp_number(3);
                             if (!(a * b == b * a) || !((a * b) * c == a * (b * c))) {
                               why = "multiplication laws";
                               return false;
                             }
                             if (!(a * (b + c) == a * b + a * c)) {
                               why = "distributivity";
                               return false;
                             }
                             return true;
                           });
}

inline SuiteResult suite_interval_soundness(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "interval-soundness", "containment", seed, cases, [](RandomSource& rs, std::string& why) {
        Rat l1 = rs.rational(5, 3), h1 = l1 + boost::multiprecision::abs(rs.rational(5, 3));
        Rat l2 = rs.rational(5, 3), h2 = l2 + boost::multiprecision::abs(rs.rational(5, 3));
        Interval a(l1, h1), b(l2, h2);
        Rat t1(Int(rs.range(0, 4)), Int(4)), t2(Int(rs.range(0, 4)), Int(4));
        Rat x = l1 + t1 * (h1 - l1), y = l2 + t2 * (h2 - l2);
        unsigned k = static_cast<unsigned>(rs.range(0, 3));
        if (!(a + b).contains(x + y) || !(a - b).contains(x - y) || !(a * b).contains(x * y)) {
          why = "arithmetic containment";
          return false;
        }
        if (!abs(a).contains(Rat(boost::multiprecision::abs(x))) ||
            !pow(a, k).contains(pow_rat(x, k))) {
          why = "abs/pow containment";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_enclosure_exactness(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "enclosure-exactness", "width-and-containment", seed, cases,
      [](RandomSource& rs, std::string& why) {
        ExpNumber rational_only = rs.exp_number(3, true);
        for (const char* e : {"1", "1/1000", "1/1000000000"}) {
          Rat eps = parse_rat(e);
          Interval iv = enclose(rational_only, eps);
          if (!iv.contains(rational_only.rational_value())) {
            why = "rational value escapes its enclosure";
            return false;
          }
          if (iv.width() > eps) {
            why = "width exceeds eps";
            return false;
          }
        }
        ExpNumber mixed = rs.exp_number(3);
        for (const char* e : {"1/100", "1/100000"}) {
          Rat eps = parse_rat(e);
          if (enclose(mixed, eps).width() > eps) {
            why = "width exceeds eps on mixed value";
            return false;
          }
        }
        return true;
      });
}

// ---- exppoly semiformal laws ----------------------------------------------

inline SuiteResult suite_shift_composition(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases("ep-shift-composition", "shift-composition", seed, cases,
                           [](RandomSource& rs, std::string& why) {
                             ExpPoly f = rs.exp_poly();
                             Rat c = rs.rational(2, 2), d = rs.rational(2, 2);
                             if (!(f.shift(c).shift(d) == f.shift(c + d))) {
                               why = "f((x+c)+d) != f(x+(c+d))";
                               return false;
                             }
                             return true;
                           });
}

inline SuiteResult suite_shift_product(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases("ep-shift-product", "shift-product", seed, cases,
                           [](RandomSource& rs, std::string& why) {
                             ExpPoly f = rs.exp_poly(), g = rs.exp_poly();
                             Rat c = rs.rational(2, 2);
                             if (!((f * g).shift(c) == f.shift(c) * g.shift(c))) {
                               why = "(fg)(x+c) != f(x+c) g(x+c)";
                               return false;
                             }
                             return true;
                           });
}

inline SuiteResult suite_exponential_identity(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "ep-exponential-identity", "exp-shift-identity", seed, cases,
      [](RandomSource& rs, std::string& why) {
        Rat a = rs.nonzero_rational(3, 2), b = rs.rational(3, 2);
        ExpPoly scaled_exp = ExpPoly::exponential().inner_scale(a);
        ExpPoly lhs = scaled_exp.shift(b / a);
        ExpPoly rhs = scaled_exp.scaled(ExpNumber::e_pow(b));
        if (!(lhs == rhs)) {
          why = "Exp((ax)+b/a) != e^b Exp(ax)";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_newton_linearity(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "newton-linearity", "integral-linearity", seed, cases,
      [](RandomSource& rs, std::string& why) {
        ExpPoly f = rs.exp_poly(), g = rs.exp_poly();
        Rat a = rs.rational(3, 2), b = rs.rational(3, 2);
        Rat u = rs.rational(2, 1), v = rs.rational(2, 1);
        ExpNumber lhs = newton_integral(f.scaled(a) + g.scaled(b), u, v);
        ExpNumber rhs = a * newton_integral(f, u, v) + b * newton_integral(g, u, v);
        if (!(lhs == rhs)) {
          why = "linearity fails";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_newton_additivity(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases("newton-additivity", "interval-additivity", seed, cases,
                           [](RandomSource& rs, std::string& why) {
                             ExpPoly f = rs.exp_poly();
                             Rat u = rs.rational(2, 1), v = rs.rational(2, 1),
                                 w = rs.rational(2, 1);
                             ExpNumber lhs = newton_integral(f, u, w);
                             ExpNumber rhs =
                                 newton_integral(f, u, v) + newton_integral(f, v, w);
                             if (!(lhs == rhs)) {
                               why = "additivity fails";
                               return false;
                             }
                             return true;
                           });
}

inline SuiteResult suite_newton_shift(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "newton-shift", "integration-interval-shift", seed, cases,
      [](RandomSource& rs, std::string& why) {
        ExpPoly f = rs.exp_poly();
        Rat u = rs.rational(2, 1), v = rs.rational(2, 1), b = rs.rational(2, 1);
        if (!(newton_integral(f.shift(b), u, v) == newton_integral(f, u + b, v + b))) {
          why = "interval shift fails";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_improper_linearity(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "improper-linearity", "integral-linearity", seed, cases,
      [](RandomSource& rs, std::string& why) {
        RandomSource::ExpPolyOptions opt;
        opt.negative_rates_only = true;
        ExpPoly f = rs.exp_poly(opt), g = rs.exp_poly(opt);
        Rat a = rs.rational(3, 2), b = rs.rational(3, 2), u = rs.rational(2, 1);
        ExpNumber lhs = improper_integral(f.scaled(a) + g.scaled(b), u);
        ExpNumber rhs = a * improper_integral(f, u) + b * improper_integral(g, u);
        if (!(lhs == rhs)) {
          why = "linearity fails";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_improper_additivity(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "improper-additivity", "interval-additivity", seed, cases,
      [](RandomSource& rs, std::string& why) {
        RandomSource::ExpPolyOptions opt;
        opt.negative_rates_only = true;
        ExpPoly f = rs.exp_poly(opt);
        Rat u = rs.rational(2, 1), v = rs.rational(2, 1);
        ExpNumber lhs = improper_integral(f, u);
        ExpNumber rhs = newton_integral(f, u, v) + improper_integral(f, v);
        if (!(lhs == rhs)) {
          why = "splitting at a finite point fails";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_improper_shift(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "improper-shift", "integration-interval-shift", seed, cases,
      [](RandomSource& rs, std::string& why) {
        RandomSource::ExpPolyOptions opt;
        opt.negative_rates_only = true;
        ExpPoly f = rs.exp_poly(opt);
        Rat u = rs.rational(2, 1), b = rs.rational(2, 1);
        if (!(improper_integral(f.shift(b), u) == improper_integral(f, u + b))) {
          why = "interval shift fails";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_ep_derivative_primitive(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "ep-derivative-primitive", "fundamental-laws", seed, cases,
      [](RandomSource& rs, std::string& why) {
        ExpPoly f = rs.exp_poly(), g = rs.exp_poly();
        if (!(f.primitive().derivative() == f)) {
          why = "derivative of primitive is not the identity";
          return false;
        }
        if (!f.primitive().value(Rat(0)).is_zero()) {
          why = "primitive does not vanish at 0";
          return false;
        }
        ExpPoly back = f.derivative().primitive();
        ExpPoly expect = f - ExpPoly::term(Rat(0), EPoly::constant(f.value(Rat(0))));
        if (!(back == expect)) {
          why = "primitive of derivative != f - f(0)";
          return false;
        }
        if (!((f * g).derivative() == f.derivative() * g + f * g.derivative())) {
          why = "product rule fails";
          return false;
        }
        return true;
      });
}

// Coefficients produced by the closed-form expansion agree with an honest
// series_core construction of the same object.
inline SuiteResult suite_series_agreement(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "ep-series-agreement", "expansion-consistency", seed, cases,
      [](RandomSource& rs, std::string& why) {
        const unsigned N = 8;
        long parts = rs.range(1, 2);
        ExpPoly f;
        TruncSeries direct = TruncSeries::constant(Rat(0), N);
        for (long i = 0; i < parts; ++i) {
          Rat rate = rs.rational(2, 2);
          RatPoly p = rs.poly(2, 3, 2);
          f += ExpPoly::term(rate, lift(p));
          direct = direct + TruncSeries::from_poly(p, N) *
                                TruncSeries::exp_series(N).inner_scale(rate);
        }
        auto pinned = to_interval_series(f, N, parse_rat("1/1000"));
        for (unsigned n = 0; n <= N; ++n) {
          if (pinned[n].width() != 0 || pinned[n].lo() != direct.coeff_at(n)) {
            why = "coefficient " + std::to_string(n) + " not pinned exactly";
            return false;
          }
        }
        return true;
      });
}

// ---- rational series -------------------------------------------------------

inline SuiteResult suite_partial_fraction_reconstruction(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "pf-reconstruction", "decomposition-uniqueness", seed, cases,
      [](RandomSource& rs, std::string& why) {
        auto data = rs.ratfun_with_poles();
        PartialFractions pf = partial_fractions(data.fun);
        if (!(pf.recombine() == data.fun)) {
          why = "recombination differs";
          return false;
        }
        std::vector<std::pair<Rat, unsigned>> found;
        for (const auto& [a, o] : pf.pole_orders())
          found.emplace_back(a, o);
        if (found != data.poles) {
          why = "pole multiset differs from construction";
          return false;
        }
        TruncSeries a = data.fun.expand(12), b = pf.recombine().expand(12);
        if (!(a == b)) {
          why = "expansions differ";
          return false;
        }
        return true;
      });
}

inline SuiteResult suite_pole_proposition(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "pole-proposition", "pole-order-statement", seed, cases,
      [](RandomSource& rs, std::string& why) {
        auto data = rs.ratfun_with_poles();
        RatPoly p = rs.poly(2, 3, 1);
        unsigned m = static_cast<unsigned>(rs.range(0, 2));
        Rat c = rs.nonzero_rational(3, 1);
        PolePropResult res = check_pole_prop(p, m, c, data.fun);
        if (!res.verdict.ok()) {
          why = res.verdict.detail;
          return false;
        }
        // scaling p by a nonzero rational must not change the verdict
        PolePropResult res2 = check_pole_prop(p.scaled(rs.nonzero_rational(3, 1)), m, c, data.fun);
        if (res2.verdict.ok() != res.verdict.ok()) {
          why = "verdict changed under scaling of p";
          return false;
        }
        return true;
      });
}

// ---- exact/interval coherence ----------------------------------------------

inline SuiteResult suite_coherence(std::uint64_t seed, unsigned cases)
{
  return detail::run_cases(
      "exact-interval-coherence", "dual-route-containment", seed, cases,
      [](RandomSource& rs, std::string& why) {
        ExpPoly f = rs.exp_poly();
        Rat v = rs.rational(3, 2);
        ExpNumber exact = f.value(v);
        Interval tight = exact.is_zero() ? Interval(Rat(0))
                                         : enclose(exact, parse_rat("1e-20"));
        Interval indep = interval_value(f, v, parse_rat("1e-10"));
        if (!tight.intersects(indep)) {
          why = "exact and independent enclosures are disjoint";
          return false;
        }
        if (!indep.contains(tight.midpoint())) {
          why = "midpoint of the exact enclosure escapes the independent one";
          return false;
        }
        return true;
      });
}

// Aggregate runner in a fixed order; the CLI and the acceptance suite both
// consume this list.
inline std::vector<SuiteResult> run_property_suites(std::uint64_t seed, unsigned cases)
{
  return {
      suite_series_ring(seed, cases),
      suite_series_leibniz(seed, cases),
      suite_series_inner(seed, cases),
      suite_series_derivative_primitive(seed, cases),
      suite_enum_ring(seed, cases),
      suite_interval_soundness(seed, cases),
      suite_enclosure_exactness(seed, cases),
      suite_shift_composition(seed, cases),
      suite_shift_product(seed, cases),
      suite_exponential_identity(seed, cases),
      suite_newton_linearity(seed, cases),
      suite_newton_additivity(seed, cases),
      suite_newton_shift(seed, cases),
      suite_improper_linearity(seed, cases),
      suite_improper_additivity(seed, cases),
      suite_improper_shift(seed, cases),
      suite_ep_derivative_primitive(seed, cases),
      suite_series_agreement(seed, cases),
      suite_partial_fraction_reconstruction(seed, cases),
      suite_pole_proposition(seed, cases),
      suite_coherence(seed, cases),
  };
}

} // namespace fps

#endif
