#pragma once

#include <stdexcept>
#include <string>

namespace solvspec {

enum class ErrorKind {
  DivisionByZero,
  UnboundSymbol,
  PoleAtAssignment,
  ParseError,
  InexactDivision,
  DoesNotSplitOverField,
  NoConsistentFunction,
  NotSolvable,
  NotASubalgebra,
  InconsistentPattern,
  VerificationFailed,
  ShapeMismatch,
  SingularB,
  NotAbelianComplement,
  InvalidSpec,
  UnknownFamily,
  Infeasible,
  Inconclusive,
  UsageError,
  SchemaError,
  UnknownCase,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace solvspec
