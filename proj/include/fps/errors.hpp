#ifndef FPS_ERRORS_HPP
#define FPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fps {

// Access to a series coefficient past the known horizon.
struct HorizonError : std::out_of_range {
  explicit HorizonError(const std::string& what) : std::out_of_range(what) {}
};

// A denominator does not factor into rational-root linear factors.
struct IrreducibleFactorError : std::domain_error {
  explicit IrreducibleFactorError(const std::string& what) : std::domain_error(what) {}
};

// Improper integral requested for an integrand whose primitive has no limit.
struct DivergentIntegralError : std::domain_error {
  explicit DivergentIntegralError(const std::string& what) : std::domain_error(what) {}
};

} // namespace fps

#endif
