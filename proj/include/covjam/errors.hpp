#pragma once

#include <stdexcept>
#include <string>

namespace covjam {

// Operand shapes do not agree (e.g. h and A in a quadratic form).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A matrix that must be Hermitian, PSD or PD is not, or is numerically singular.
class MatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Probability-zero degeneracies: zero vectors, empty null spaces,
// projections that vanish, h_aw = 0.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A scheme was requested for an antenna configuration that cannot support it.
class NotApplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace covjam
