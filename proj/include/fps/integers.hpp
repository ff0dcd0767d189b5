#ifndef FPS_INTEGERS_HPP
#define FPS_INTEGERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace fps {

using Int = boost::multiprecision::cpp_int;

inline Int factorial(unsigned n)
{
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// (n)_m = n(n-1)...(n-m+1), with (n)_0 = 1.
inline Int falling_factorial(const Int& n, unsigned m)
{
  Int f = 1;
  for (unsigned i = 0; i < m; ++i)
    f *= n - i;
  return f;
}

inline Int binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  Int b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

inline Int pow_int(const Int& base, unsigned e)
{
  return boost::multiprecision::pow(base, e);
}

inline bool divides(const Int& d, const Int& x)
{
  return x % d == 0;
}

} // namespace fps

#endif
