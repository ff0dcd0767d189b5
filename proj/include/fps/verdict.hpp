#ifndef FPS_VERDICT_HPP
#define FPS_VERDICT_HPP

#include <functional>
#include <string>
#include <utility>

#include "fps/interval.hpp"

namespace fps {

enum class Status { pass, fail, undecided };

inline const char* to_string(Status s)
{
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  default: return "undecided";
  }
}

struct Verdict {
  Status status = Status::fail;
  std::string detail;

  bool ok() const { return status == Status::pass; }

  static Verdict pass(std::string d = {}) { return {Status::pass, std::move(d)}; }
  static Verdict fail(std::string d) { return {Status::fail, std::move(d)}; }
  static Verdict undecided(std::string d) { return {Status::undecided, std::move(d)}; }
};

// Certified comparison lhs <= rhs through interval enclosures. Both sides
// are produced at a requested width; overlapping enclosures trigger
// refinement, and if the retry cap is reached the comparison reports
// undecided rather than guessing.
inline Status certify_le(const std::function<Interval(const Rat&)>& lhs,
                         const std::function<Interval(const Rat&)>& rhs, Rat eps,
                         unsigned retries = 6)
{
  for (unsigned attempt = 0;; ++attempt) {
    Interval a = lhs(eps), b = rhs(eps);
    if (a.hi() <= b.lo())
      return Status::pass;
    if (a.lo() > b.hi())
      return Status::fail;
    if (attempt >= retries)
      return Status::undecided;
    eps /= 64;
  }
}

} // namespace fps

#endif
