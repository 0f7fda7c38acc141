#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Input outside the mathematical domain of an operation (x < 2 for a sieve,
// n = 0 for a factorization, P+(1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A 64-bit frequency (or an intermediate product) would exceed 2^63 - 1.
class FrequencyOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Variable counts or vector lengths that do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size or evaluation budget would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent parameters, e.g. a Hadamard matrix of non power-of-two size.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bohr
