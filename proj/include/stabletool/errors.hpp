#pragma once

#include <stdexcept>
#include <string>

namespace stabletool {

// All library errors derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Gamma evaluated at (or within the guard band of) a non-positive integer.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& msg) : DomainError(msg) {}
};

class InvalidParameterError : public DomainError {
 public:
  explicit InvalidParameterError(const std::string& msg) : DomainError(msg) {}
};

class DegenerateKernelError : public Error {
 public:
  explicit DegenerateKernelError(const std::string& msg) : Error(msg) {}
};

class ZeroFrequencyError : public DomainError {
 public:
  explicit ZeroFrequencyError(const std::string& msg) : DomainError(msg) {}
};

class BisectionError : public Error {
 public:
  explicit BisectionError(const std::string& msg) : Error(msg) {}
};

class TailDivergenceError : public DomainError {
 public:
  explicit TailDivergenceError(const std::string& msg) : DomainError(msg) {}
};

class ResolutionError : public Error {
 public:
  explicit ResolutionError(const std::string& msg) : Error(msg) {}
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace stabletool
