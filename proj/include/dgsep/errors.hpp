#pragma once

#include <stdexcept>
#include <string>

namespace dgsep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed input (JSON schema violations, unknown labels, bad field spec).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A left basis fails to give unique coordinates in some degree.
class FreenessError : public Error {
 public:
  FreenessError(const std::string& what, int degree)
      : Error(what + " (degree " + std::to_string(degree) + ")"),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// A product of window elements left the computed window.
class ClosureEscape : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// A decision procedure was called outside the hypotheses it can certify.
class HypothesisUnverified : public Error {
 public:
  using Error::Error;
};

class AutomorphismOrderError : public Error {
 public:
  using Error::Error;
};

/// Input data violates an algebraic identity the construction depends on.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class CertificateInvalid : public Error {
 public:
  using Error::Error;
};

}  // namespace dgsep
