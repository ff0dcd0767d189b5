#ifndef FPS_EXP_NUMBER_HPP
#define FPS_EXP_NUMBER_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "fps/interval.hpp"
#include "fps/rational.hpp"

namespace fps {

// Certified enclosure of e^q for rational q, of width at most eps.
//
// For q >= 0 the partial sums S_m of sum q^n/n! are computed with a single
// integer recurrence (numerators over the common denominator s^m * m!), and
// the tail is majorized geometrically once m+2 > q:
//   tail <= term_{m+1} / (1 - q/(m+2)).
// For q < 0 the enclosure is the exact reciprocal of the e^{|q|} enclosure,
// which cannot widen it because e^{|q|} >= 1.
inline Interval enclose_exp(const Rat& q, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("enclose_exp: eps must be positive");
  if (q < 0)
    return reciprocal(enclose_exp(-q, eps));

  const Int p = num(q), s = den(q);
  Int R = 1;      // numerator of S_m over D
  Int D = 1;      // s^m * m!
  Int ppow = p;   // p^{m+1}
  unsigned long m = 0;
  for (;;) {
    if (Rat(m + 2) > q) {
      Rat term(ppow, D * s * (m + 1));
      Rat bound = term / (1 - q / (m + 2));
      if (bound <= eps) {
        Rat S(R, D);
        return {S, S + bound};
      }
    }
    R = (m + 1) * s * R + ppow;
    D *= s * (m + 1);
    ppow *= p;
    ++m;
  }
}

// Exact element of the ring Q[e^q : q in Q]: a finite rational-linear
// combination of powers of e, stored as exponent -> coefficient. Equality is
// symbolic (coefficient-wise); no numeric identification of distinct
// combinations ever happens here.
class ExpNumber {
public:
  ExpNumber() = default;
  explicit ExpNumber(const Rat& c)
  {
    if (c != 0)
      terms_[Rat(0)] = c;
  }
  explicit ExpNumber(const Int& c) : ExpNumber(Rat(c)) {}

  static ExpNumber e_pow(const Rat& q, const Rat& coeff = Rat(1))
  {
    ExpNumber v;
    if (coeff != 0)
      v.terms_[q] = coeff;
    return v;
  }

  bool is_zero() const { return terms_.empty(); }

  // True when the value lies in Q (only the e^0 term, or zero).
  bool is_rational() const
  {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }

  Rat rational_value() const
  {
    if (terms_.empty())
      return Rat(0);
    if (!is_rational())
      throw std::logic_error("ExpNumber has irrational part");
    return terms_.begin()->second;
  }

  const std::map<Rat, Rat>& terms() const { return terms_; }

  Rat coeff(const Rat& q) const
  {
    auto it = terms_.find(q);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  ExpNumber& operator+=(const ExpNumber& o)
  {
    for (const auto& [q, c] : o.terms_)
      add_term(q, c);
    return *this;
  }

  ExpNumber& operator-=(const ExpNumber& o)
  {
    for (const auto& [q, c] : o.terms_)
      add_term(q, -c);
    return *this;
  }

  ExpNumber& operator*=(const Rat& c)
  {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [q, v] : terms_)
      v *= c;
    return *this;
  }

  ExpNumber& operator/=(const Rat& c)
  {
    for (auto& [q, v] : terms_)
      v /= c;
    return *this;
  }

  friend ExpNumber operator+(ExpNumber a, const ExpNumber& b) { return a += b; }
  friend ExpNumber operator-(ExpNumber a, const ExpNumber& b) { return a -= b; }
  friend ExpNumber operator-(const ExpNumber& a)
  {
    ExpNumber r;
    for (const auto& [q, c] : a.terms_)
      r.terms_[q] = -c;
    return r;
  }

  // e^a * e^b = e^{a+b}: exponents add, coefficients multiply.
  friend ExpNumber operator*(const ExpNumber& a, const ExpNumber& b)
  {
    ExpNumber r;
    for (const auto& [qa, ca] : a.terms_)
      for (const auto& [qb, cb] : b.terms_)
        r.add_term(qa + qb, ca * cb);
    return r;
  }

  friend ExpNumber operator*(ExpNumber a, const Rat& c) { return a *= c; }
  friend ExpNumber operator*(const Rat& c, ExpNumber a) { return a *= c; }
  friend ExpNumber operator/(ExpNumber a, const Rat& c) { return a /= c; }

  bool operator==(const ExpNumber& o) const { return terms_ == o.terms_; }

private:
  void add_term(const Rat& q, const Rat& c)
  {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(q, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  std::map<Rat, Rat> terms_;
};

// Interval of width <= eps containing the real value of v. The width budget
// is split over the terms with nonzero exponent; rational terms are exact.
inline Interval enclose(const ExpNumber& v, const Rat& eps)
{
  if (eps <= 0)
    throw std::invalid_argument("enclose: eps must be positive");
  unsigned long irrational_terms = 0;
  for (const auto& [q, c] : v.terms())
    if (q != 0)
      ++irrational_terms;

  Interval acc;
  for (const auto& [q, c] : v.terms()) {
    if (q == 0) {
      acc = acc + Interval(c);
    } else {
      Rat per_term = eps / (Rat(irrational_terms) * Rat(boost::multiprecision::abs(c)));
      acc = acc + c * enclose_exp(q, per_term);
    }
  }
  return acc;
}

inline std::string to_string(const ExpNumber& v)
{
  if (v.is_zero())
    return "0";
  std::string s;
  for (const auto& [q, c] : v.terms()) {
    if (!s.empty())
      s += " + ";
    s += to_string(c) + "*e^(" + to_string(q) + ")";
  }
  return s;
}

} // namespace fps

#endif
