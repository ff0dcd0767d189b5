#ifndef FPS_POLYNOMIAL_HPP
#define FPS_POLYNOMIAL_HPP

#include <vector>

#include "fps/exp_number.hpp"
#include "fps/rational.hpp"

namespace fps {

namespace detail {
inline bool scalar_is_zero(const Rat& x) { return x == 0; }
inline bool scalar_is_zero(const ExpNumber& x) { return x.is_zero(); }
} // namespace detail

// Dense polynomial over a scalar ring S (Rat or ExpNumber). Trailing zero
// coefficients are trimmed; the zero polynomial is the empty vector and its
// degree() is -1, standing in for "minus infinity".
template <class S>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const S& v)
  {
    Poly p;
    if (!detail::scalar_is_zero(v))
      p.c_.push_back(v);
    return p;
  }

  static Poly monomial(const S& v, unsigned k)
  {
    Poly p;
    if (!detail::scalar_is_zero(v)) {
      p.c_.assign(k + 1, S());
      p.c_[k] = v;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  S coeff(unsigned i) const { return i < c_.size() ? c_[i] : S(); }
  const std::vector<S>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o)
  {
    if (c_.size() < o.c_.size())
      c_.resize(o.c_.size(), S());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += o.c_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o)
  {
    if (c_.size() < o.c_.size())
      c_.resize(o.c_.size(), S());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
      c_[i] += -o.c_[i];
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a)
  {
    Poly r;
    r.c_.reserve(a.c_.size());
    for (const auto& v : a.c_)
      r.c_.push_back(-v);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b)
  {
    if (a.is_zero() || b.is_zero())
      return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, S());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  Poly& scale(const S& v)
  {
    for (auto& x : c_)
      x = x * v;
    trim();
    return *this;
  }

  Poly scaled(const S& v) const
  {
    Poly r = *this;
    r.scale(v);
    return r;
  }

  Poly derivative() const
  {
    Poly r;
    if (c_.size() <= 1)
      return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_.push_back(c_[i] * Rat(Int(i)));
    r.trim();
    return r;
  }

  // Antiderivative with zero constant term.
  Poly primitive() const
  {
    Poly r;
    if (c_.empty())
      return r;
    r.c_.assign(c_.size() + 1, S());
    for (std::size_t i = 0; i < c_.size(); ++i)
      r.c_[i + 1] = c_[i] / Rat(Int(i + 1));
    r.trim();
    return r;
  }

  // Substitution x -> x + b via repeated synthetic division (Taylor shift).
  Poly compose_shift(const Rat& b) const
  {
    if (c_.empty() || b == 0)
      return *this;
    Poly r = *this;
    std::size_t m = r.c_.size();
    for (std::size_t k = 0; k + 1 < m; ++k)
      for (std::size_t j = m - 1; j-- > k;)
        r.c_[j] += r.c_[j + 1] * b;
    r.trim();
    return r;
  }

  // x -> a*x: coefficient i is multiplied by a^i.
  Poly inner_scale(const Rat& a) const
  {
    Poly r = *this;
    Rat ai = 1;
    for (std::size_t i = 1; i < r.c_.size(); ++i) {
      ai *= a;
      r.c_[i] = r.c_[i] * ai;
    }
    r.trim();
    return r;
  }

  S eval(const Rat& x) const
  {
    S acc;
    for (std::size_t i = c_.size(); i-- > 0;)
      acc = acc * x + c_[i];
    return acc;
  }

  Poly pow(unsigned e) const
  {
    Poly r = constant(S(Rat(1)));
    Poly base = *this;
    while (e) {
      if (e & 1)
        r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

private:
  void trim()
  {
    while (!c_.empty() && detail::scalar_is_zero(c_.back()))
      c_.pop_back();
  }

  std::vector<S> c_;
};

using RatPoly = Poly<Rat>;
using EPoly = Poly<ExpNumber>;

inline EPoly lift(const RatPoly& p)
{
  std::vector<ExpNumber> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs())
    c.emplace_back(x);
  return EPoly(std::move(c));
}

} // namespace fps

#endif
