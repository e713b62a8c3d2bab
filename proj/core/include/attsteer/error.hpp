#pragma once

#include <stdexcept>
#include <string>

namespace attsteer {

// Invalid configuration, unreadable or malformed input files.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation hit a degenerate case (singular matrix, zero FVT
// denominator, non-finite state).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace attsteer
