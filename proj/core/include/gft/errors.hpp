#pragma once

#include <stdexcept>
#include <string>

namespace gft {

// Precondition violations on numeric inputs (orders, parameter ranges, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Division by a series whose constant term vanishes.
class SingularSeriesError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Reversion of a series with zero linear coefficient.
class NotInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotImplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The disk-containment condition of a radius problem never holds on (0,1).
class NoRadiusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gft
