#ifndef FPS_TRUNC_SERIES_HPP
#define FPS_TRUNC_SERIES_HPP

#include <algorithm>
#include <vector>

#include "fps/errors.hpp"
#include "fps/polynomial.hpp"
#include "fps/rational.hpp"

namespace fps {

// Truncated formal power series over Rat: coefficients for x^0..x^N are
// known exactly, nothing past the horizon N is. Every binary operation takes
// the minimum of the input horizons, which keeps all stored coefficients
// exact (coefficient n of a product depends only on coefficients up to n).
// Reading past the horizon is an error, never a silent zero.
class TruncSeries {
public:
  explicit TruncSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs))
  {
    if (c_.empty())
      throw std::invalid_argument("TruncSeries needs at least the x^0 coefficient");
  }

  static TruncSeries constant(const Rat& v, unsigned horizon)
  {
    std::vector<Rat> c(horizon + 1, Rat(0));
    c[0] = v;
    return TruncSeries(std::move(c));
  }

  static TruncSeries from_poly(const RatPoly& p, unsigned horizon)
  {
    std::vector<Rat> c(horizon + 1, Rat(0));
    for (unsigned i = 0; i <= horizon; ++i)
      c[i] = p.coeff(i);
    return TruncSeries(std::move(c));
  }

  // Exp truncated at N: coefficients 1/n!.
  static TruncSeries exp_series(unsigned horizon)
  {
    std::vector<Rat> c(horizon + 1);
    Int f = 1;
    c[0] = 1;
    for (unsigned n = 1; n <= horizon; ++n) {
      f *= n;
      c[n] = Rat(Int(1), f);
    }
    return TruncSeries(std::move(c));
  }

  unsigned horizon() const { return static_cast<unsigned>(c_.size()) - 1; }

  const Rat& coeff_at(unsigned n) const
  {
    if (n >= c_.size())
      throw HorizonError("coefficient " + std::to_string(n) + " beyond horizon " +
                         std::to_string(horizon()));
    return c_[n];
  }

  const std::vector<Rat>& coeffs() const { return c_; }

  TruncSeries truncate(unsigned new_horizon) const
  {
    if (new_horizon >= c_.size())
      throw HorizonError("cannot extend horizon by truncation");
    return TruncSeries(std::vector<Rat>(c_.begin(), c_.begin() + new_horizon + 1));
  }

  friend TruncSeries lincomb(const Rat& a, const TruncSeries& f, const Rat& b,
                             const TruncSeries& g)
  {
    unsigned h = std::min(f.horizon(), g.horizon());
    std::vector<Rat> c(h + 1);
    for (unsigned n = 0; n <= h; ++n)
      c[n] = a * f.c_[n] + b * g.c_[n];
    return TruncSeries(std::move(c));
  }

  friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g)
  {
    return lincomb(Rat(1), f, Rat(1), g);
  }

  friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g)
  {
    return lincomb(Rat(1), f, Rat(-1), g);
  }

  // Cauchy product up to the minimum horizon.
  friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g)
  {
    unsigned h = std::min(f.horizon(), g.horizon());
    std::vector<Rat> c(h + 1, Rat(0));
    for (unsigned n = 0; n <= h; ++n)
      for (unsigned k = 0; k <= n; ++k)
        c[n] += f.c_[k] * g.c_[n - k];
    return TruncSeries(std::move(c));
  }

  TruncSeries derivative() const
  {
    if (horizon() == 0)
      throw HorizonError("derivative of a zero-horizon series");
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t n = 0; n + 1 < c_.size(); ++n)
      c[n] = Rat(Int(n + 1)) * c_[n + 1];
    return TruncSeries(std::move(c));
  }

  // Constant term 0; the horizon grows by one since coefficient n+1 of the
  // primitive needs only coefficient n of the input.
  TruncSeries primitive() const
  {
    std::vector<Rat> c(c_.size() + 1, Rat(0));
    for (std::size_t n = 0; n < c_.size(); ++n)
      c[n + 1] = c_[n] / Rat(Int(n + 1));
    return TruncSeries(std::move(c));
  }

  TruncSeries scaled(const Rat& c) const
  {
    std::vector<Rat> s = c_;
    for (auto& x : s)
      x *= c;
    return TruncSeries(std::move(s));
  }

  // f(ax): coefficient n is multiplied by a^n.
  TruncSeries inner_scale(const Rat& a) const
  {
    std::vector<Rat> c = c_;
    Rat an = 1;
    for (std::size_t n = 1; n < c.size(); ++n) {
      an *= a;
      c[n] *= an;
    }
    return TruncSeries(std::move(c));
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

private:
  std::vector<Rat> c_;
};

} // namespace fps

#endif
