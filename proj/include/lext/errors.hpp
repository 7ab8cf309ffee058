#pragma once

#include <stdexcept>
#include <string>

namespace lext {

// Malformed input values (a word that is not a permutation, a permutation
// outside the class an operation is defined on).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Out-of-range or mutually inconsistent numeric parameters.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact identity that must hold by construction failed. Never expected to
// fire; if it does, an algebraic routine is wrong.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lext
