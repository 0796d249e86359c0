#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ofg {

/// Base class for domain failures (bad instance, solver failure). The CLI
/// maps these to exit status 1; precondition violations on arguments use
/// the std::logic_error family instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class ConditionUnsatisfied : public Error {
 public:
  using Error::Error;
};

}  // namespace ofg
