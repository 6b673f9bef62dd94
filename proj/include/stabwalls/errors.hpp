#pragma once

#include <stdexcept>
#include <string>

namespace stabwalls {

// Malformed or inconsistent input data (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A well-formed request whose computation cannot be carried out (CLI exit code 3).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stabwalls
