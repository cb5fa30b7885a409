#pragma once

#include <stdexcept>
#include <string>

namespace ricsol {

/// Malformed data: bad indices, dimension mismatches, inconsistent tables.
class StructuralError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A builder or command received an argument outside its admissible range.
class ParameterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The inner product is unusable (not symmetric positive definite).
class MetricError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Unreadable or ill-formed input files.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ricsol
