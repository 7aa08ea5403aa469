#pragma once

#include <stdexcept>
#include <string>

namespace ejm {

// Operand dimensions do not fit the operation (only 2 and 4 are supported).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A parameter lies outside its admissible range, e.g. |z| < 1/sqrt(3) for a basis.
class ParameterRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A pure-state routine received amplitudes whose squared norm is not 1.
class NormalizationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Tetrahedron geometry was requested for (near) zero Bloch vectors.
class DegenerateGeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed circuit text.
class CircuitParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ejm
