#pragma once

#include <stdexcept>
#include <string>

namespace zinbiel {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNilpotentError : std::domain_error {
  using std::domain_error::domain_error;
};

struct DegenerateError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParameterDomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct SingularMatrixError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zinbiel
