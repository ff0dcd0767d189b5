#ifndef FPS_SERIALIZE_HPP
#define FPS_SERIALIZE_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fps/bbr.hpp"
#include "fps/exp_poly.hpp"
#include "fps/hilbert.hpp"
#include "fps/verdict.hpp"

namespace fps {

using Json = nlohmann::json;

inline Json json_of(const Rat& x) { return to_string(x); }

inline Json json_of(const Interval& iv)
{
  return Json{{"lo", to_string(iv.lo())}, {"hi", to_string(iv.hi())}};
}

// Sorted "exponent:coefficient" entries, e.g. ["0/1:-1/1", "1/1:1/1"].
inline Json json_of(const ExpNumber& v)
{
  Json arr = Json::array();
  for (const auto& [q, c] : v.terms())
    arr.push_back(to_string(q) + ":" + to_string(c));
  return arr;
}

inline Json json_of(const TruncSeries& s)
{
  Json arr = Json::array();
  for (const auto& c : s.coeffs())
    arr.push_back(to_string(c));
  return Json{{"horizon", s.horizon()}, {"coefficients", arr}};
}

inline Json json_of(const ExpPoly& f)
{
  Json arr = Json::array();
  for (const auto& [rate, p] : f.parts()) {
    Json coeffs = Json::array();
    for (int j = 0; j <= p.degree(); ++j)
      coeffs.push_back(json_of(p.coeff(static_cast<unsigned>(j))));
    arr.push_back(Json{{"rate", to_string(rate)}, {"coefficients", coeffs}});
  }
  return arr;
}

inline Json json_of(const HilbertReport& rep)
{
  return Json{{"r", rep.r},
              {"B_r", rep.B.str()},
              {"B_r_residue", rep.B_residue.str()},
              {"A_r_exact", json_of(rep.Ar_exact)},
              {"A_r_interval", json_of(rep.Ar_interval)},
              {"identity_ok", rep.identity_ok},
              {"bound_c", to_string(rep.bound_c)}};
}

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows)
{
  auto emit_row = [&os](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i)
        os << ',';
      os << row[i];
    }
    os << '\n';
  };
  emit_row(header);
  for (const auto& r : rows)
    emit_row(r);
}

} // namespace fps

#endif
