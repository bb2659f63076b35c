#pragma once

#include <stdexcept>
#include <string>

namespace qsl {

// Rejected input: out-of-domain parameters, malformed matrices, bad configs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine failed to reach its tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsl
