#pragma once

#include <stdexcept>
#include <string>

namespace mgc {

enum class Err {
  Ok = 0,
  InvalidArgument,
  UnsupportedPrimePower,
  EmptyExpr,
  UnsupportedProduct,
  AdamsOutOfScope,
  UnknownLift,
  NonIntegralCoefficient,
  OutOfModel,
  MissingData,
  MonoidViolation,
  NonTriangular,
  NegativeMultiplicity,
  NonIntegral,
  SingularSystem,
  NonIntegralSolution,
  ResidualNonzero,
  UnsupportedCharacteristic,
  NonIntegralReconstruction,
  ValidationFailure,
  ParseError,
  IoError,
  CapViolation,
};

const char* err_name(Err e);

// Exit code class used by the command line front end.
int err_exit_code(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace mgc
