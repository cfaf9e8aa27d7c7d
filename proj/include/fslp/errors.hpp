#ifndef FSLP_ERRORS_HPP
#define FSLP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fslp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mittag-Leffler series did not satisfy the stopping rule within the term cap.
class SeriesCapExceeded : public Error {
 public:
  SeriesCapExceeded() : Error("series-cap-exceeded") {}
};

// Asymptotic expansion requested below the dispatch radius.
class AsymptoticDomainError : public Error {
 public:
  explicit AsymptoticDomainError(double r, double r0)
      : Error("asymptotic-domain violation: |z|=" + std::to_string(r) +
              " below dispatch radius " + std::to_string(r0)) {}
};

// A predictor-corrector step produced a non-finite value.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(std::size_t node)
      : Error("divergence at node " + std::to_string(node)), node(node) {}
  std::size_t node;
};

}  // namespace fslp

#endif
