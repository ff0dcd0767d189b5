#ifndef FPS_TEST_UTIL_HPP
#define FPS_TEST_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "fps/exp_poly.hpp"
#include "fps/trunc_series.hpp"

namespace fps::test {

inline Rat q(long long n, long long d = 1) { return rat(n, d); }

inline RatPoly rp(std::initializer_list<long long> coeffs)
{
  std::vector<Rat> c;
  for (long long v : coeffs)
    c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline TruncSeries ts(std::initializer_list<Rat> coeffs)
{
  return TruncSeries(std::vector<Rat>(coeffs));
}

inline ExpNumber en(std::initializer_list<std::pair<long long, long long>> terms)
{
  ExpNumber v;
  for (const auto& [exp, coeff] : terms)
    v += ExpNumber::e_pow(Rat(exp), Rat(coeff));
  return v;
}

} // namespace fps::test

#endif
