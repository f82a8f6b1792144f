#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ddop {

// Precondition violations on arguments (bad order, too few samples, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A linear system that cannot be solved: duplicate Vandermonde offsets or a
// rank-deficient 2D design matrix.
class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(const std::string& what,
                               std::vector<double> spectrum = {})
      : std::runtime_error(what), spectrum_(std::move(spectrum)) {}

  // Singular values of the offending matrix when known, else empty.
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }

 private:
  std::vector<double> spectrum_;
};

}  // namespace ddop
