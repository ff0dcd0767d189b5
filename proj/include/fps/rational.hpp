#ifndef FPS_RATIONAL_HPP
#define FPS_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "fps/integers.hpp"

namespace fps {

// Arbitrary-precision rational scalar. cpp_rational keeps the canonical form
// we rely on everywhere: lowest terms, positive denominator, zero as 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline Rat pow_rat(const Rat& base, unsigned e)
{
  return Rat(pow_int(num(base), e), pow_int(den(base), e));
}

inline std::string to_string(const Rat& x)
{
  return num(x).str() + "/" + den(x).str();
}

// Accepts "p", "p/q", decimal ("-0.25") and scientific ("1e-8", "2.5e3") forms.
inline Rat parse_rat(std::string_view s)
{
  auto fail = [&] { throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'"); };
  if (s.empty())
    fail();

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string n(s.substr(0, slash)), d(s.substr(slash + 1));
    if (n.empty() || d.empty())
      fail();
    Int di(d);
    if (di == 0)
      fail();
    return Rat(Int(n), di);
  }

  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  Int mantissa = 0;
  long frac_digits = 0;
  bool any_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot)
        ++frac_digits;
      any_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      fail();
    }
  }
  if (!any_digit)
    fail();
  long exp10 = 0;
  if (i < s.size()) {
    std::string e(s.substr(i + 1));
    if (e.empty())
      fail();
    try {
      exp10 = std::stol(e);
    } catch (...) {
      fail();
    }
  }
  long shift = exp10 - frac_digits;
  Rat r(mantissa);
  if (shift > 0)
    r *= Rat(pow_int(10, static_cast<unsigned>(shift)));
  else if (shift < 0)
    r /= Rat(pow_int(10, static_cast<unsigned>(-shift)));
  return neg ? Rat(-r) : r;
}

} // namespace fps

#endif
