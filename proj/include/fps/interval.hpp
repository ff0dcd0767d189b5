#ifndef FPS_INTERVAL_HPP
#define FPS_INTERVAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fps/rational.hpp"

namespace fps {

// Closed interval with exact rational endpoints. All arithmetic here is
// outward-exact: endpoints are computed exactly, so no rounding step exists.
class Interval {
public:
  Interval() : lo_(0), hi_(0) {}
  explicit Interval(const Rat& point) : lo_(point), hi_(point) {}
  Interval(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi))
  {
    if (lo_ > hi_)
      throw std::invalid_argument("interval endpoints out of order");
  }

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const { return (lo_ + hi_) / 2; }

  bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

  bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

private:
  Rat lo_, hi_;
};

inline Interval operator+(const Interval& a, const Interval& b)
{
  return {a.lo() + b.lo(), a.hi() + b.hi()};
}

inline Interval operator-(const Interval& a, const Interval& b)
{
  return {a.lo() - b.hi(), a.hi() - b.lo()};
}

inline Interval operator-(const Interval& a)
{
  return {-a.hi(), -a.lo()};
}

inline Interval operator*(const Interval& a, const Interval& b)
{
  Rat p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi(), p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline Interval operator*(const Rat& c, const Interval& a)
{
  if (c >= 0)
    return {c * a.lo(), c * a.hi()};
  return {c * a.hi(), c * a.lo()};
}

inline Interval abs(const Interval& a)
{
  if (a.lo() >= 0)
    return a;
  if (a.hi() <= 0)
    return {-a.hi(), -a.lo()};
  return {Rat(0), std::max(Rat(-a.lo()), a.hi())};
}

// Tight k-th power (an even power of a zero-straddling interval starts at 0).
inline Interval pow(const Interval& a, unsigned k)
{
  if (k == 0)
    return Interval(Rat(1));
  Rat lk = pow_rat(a.lo(), k), hk = pow_rat(a.hi(), k);
  if (k % 2 == 1)
    return {lk, hk};
  if (a.lo() >= 0)
    return {lk, hk};
  if (a.hi() <= 0)
    return {hk, lk};
  return {Rat(0), std::max(lk, hk)};
}

// Requires 0 outside the interval.
inline Interval reciprocal(const Interval& a)
{
  if (a.lo() <= 0 && a.hi() >= 0)
    throw std::domain_error("reciprocal of an interval containing zero");
  return {1 / a.hi(), 1 / a.lo()};
}

inline Interval hull(const Interval& a, const Interval& b)
{
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

} // namespace fps

#endif
