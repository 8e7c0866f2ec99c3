#pragma once

#include <stdexcept>
#include <string>

namespace qhyper {

// Base class for all library errors. Subclasses carry a stable machine
// readable code() used by the CLI to map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InvalidParameterError : public Error {
 public:
  explicit InvalidParameterError(const std::string& what)
      : Error("invalid-parameter", what) {}
};

class IncompatibleOrdersError : public Error {
 public:
  explicit IncompatibleOrdersError(const std::string& what)
      : Error("incompatible-orders", what) {}
};

class DivisionByZeroError : public Error {
 public:
  explicit DivisionByZeroError(const std::string& what)
      : Error("division-by-zero", what) {}
};

class EvaluationAtPoleError : public Error {
 public:
  explicit EvaluationAtPoleError(const std::string& what)
      : Error("evaluation-at-pole", what) {}
};

class CaseMismatchError : public Error {
 public:
  explicit CaseMismatchError(const std::string& what)
      : Error("case-mismatch", what) {}
};

class NotConvergentError : public Error {
 public:
  explicit NotConvergentError(const std::string& what)
      : Error("not-convergent", what) {}
};

class SingularXError : public Error {
 public:
  explicit SingularXError(const std::string& what)
      : Error("singular-x", what) {}
};

}  // namespace qhyper
