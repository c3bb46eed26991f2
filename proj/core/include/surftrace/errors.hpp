#pragma once

#include <stdexcept>
#include <string>

namespace surftrace {

// Malformed input or an operation outside its mathematical domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is well formed but larger than the configured enumeration budget.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructive check failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surftrace
