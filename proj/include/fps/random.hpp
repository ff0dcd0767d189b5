#ifndef FPS_RANDOM_HPP
#define FPS_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "fps/exp_poly.hpp"
#include "fps/rational_series.hpp"

namespace fps {

// Seeded generator for the property suites. Values are drawn with plain
// modulo reduction so that a given seed produces the same stream on every
// platform; the slight bias is irrelevant for test data.
class RandomSource {
public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long range(long lo, long hi) // inclusive
  {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1u; }

  Rat rational(long max_abs_num = 4, long max_den = 3)
  {
    return Rat(Int(range(-max_abs_num, max_abs_num)), Int(range(1, max_den)));
  }

  Rat nonzero_rational(long max_abs_num = 4, long max_den = 3)
  {
    for (;;) {
      Rat r = rational(max_abs_num, max_den);
      if (r != 0)
        return r;
    }
  }

  RatPoly poly(long max_deg = 3, long max_abs_num = 4, long max_den = 2)
  {
    long d = range(0, max_deg);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c)
      x = rational(max_abs_num, max_den);
    return RatPoly(std::move(c));
  }

  TruncSeries series(unsigned horizon, long max_abs_num = 4, long max_den = 3)
  {
    std::vector<Rat> c(horizon + 1);
    for (auto& x : c)
      x = rational(max_abs_num, max_den);
    return TruncSeries(std::move(c));
  }

  ExpNumber exp_number(long max_terms = 2, bool rational_only = false)
  {
    ExpNumber v;
    long terms = range(0, max_terms);
    for (long i = 0; i < terms; ++i) {
      Rat q = rational_only ? Rat(0) : Rat(Int(range(-1, 1)));
      v += ExpNumber::e_pow(q, rational(3, 2));
    }
    return v;
  }

  EPoly epoly(long max_deg = 2, bool rational_only = false)
  {
    long d = range(0, max_deg);
    std::vector<ExpNumber> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c)
      x = exp_number(2, rational_only);
    return EPoly(std::move(c));
  }

  struct ExpPolyOptions {
    long max_parts = 2;
    long max_deg = 2;
    bool rational_scalars = false;
    bool negative_rates_only = false;
  };

  ExpPoly exp_poly() { return exp_poly(ExpPolyOptions{}); }

  ExpPoly exp_poly(const ExpPolyOptions& opt)
  {
    ExpPoly f;
    long parts = range(0, opt.max_parts);
    for (long i = 0; i < parts; ++i) {
      Rat rate = opt.negative_rates_only ? Rat(Int(range(-3, -1)))
                                         : Rat(Int(range(-2, 2)), Int(range(1, 2)));
      f += ExpPoly::term(rate, epoly(opt.max_deg, opt.rational_scalars));
    }
    return f;
  }

  // Rational series built directly from a partial-fraction shape, so the
  // poles and their orders are known by construction and the top-order
  // coefficient of every pole is nonzero.
  struct PoleData {
    RatFun fun;
    std::vector<std::pair<Rat, unsigned>> poles; // (alpha, order), sorted
  };

  PoleData ratfun_with_poles(long max_poles = 2, unsigned max_order = 2)
  {
    PoleData out;
    long want = range(1, max_poles);
    std::vector<Rat> used;
    RatFun acc(poly(2, 3, 1));
    for (long i = 0; i < want; ++i) {
      Rat alpha;
      bool fresh = false;
      for (int tries = 0; tries < 16 && !fresh; ++tries) {
        alpha = Rat(Int(range(1, 3)), Int(range(1, 2)));
        if (coin())
          alpha = -alpha;
        fresh = true;
        for (const auto& a : used)
          fresh = fresh && a != alpha;
      }
      if (!fresh)
        continue;
      used.push_back(alpha);
      unsigned order = static_cast<unsigned>(range(1, static_cast<long>(max_order)));
      for (unsigned k = 1; k < order; ++k)
        if (coin())
          acc = acc + RatFun::pole_term(nonzero_rational(3, 1), alpha, k);
      acc = acc + RatFun::pole_term(nonzero_rational(3, 1), alpha, order);
      out.poles.emplace_back(alpha, order);
    }
    std::sort(out.poles.begin(), out.poles.end());
    out.fun = acc;
    return out;
  }

private:
  std::mt19937_64 eng_;
};

} // namespace fps

#endif
