#pragma once

#include <stdexcept>

namespace socktonics {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the domain an operation is defined on (e.g. p > p_max).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Material parameters that do not describe a valid curve of their family.
class ParamError : public Error {
 public:
  using Error::Error;
};

// Decay sampling requested for a momentum with an empty solution set.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class NoSocktonError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace socktonics
