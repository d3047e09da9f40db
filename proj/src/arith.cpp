#include "arith.hpp"
#include "error.hpp"

namespace mgc {

int moebius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p) ++p;
  int r = 0;
  while (q % p == 0) {
    q /= p;
    ++r;
  }
  if (q != 1) return {0, 0};
  return {p, r};
}

const char* err_name(Err e) {
  switch (e) {
    case Err::Ok: return "Ok";
    case Err::InvalidArgument: return "InvalidArgument";
    case Err::UnsupportedPrimePower: return "UnsupportedPrimePower";
    case Err::EmptyExpr: return "EmptyExpr";
    case Err::UnsupportedProduct: return "UnsupportedProduct";
    case Err::AdamsOutOfScope: return "AdamsOutOfScope";
    case Err::UnknownLift: return "UnknownLift";
    case Err::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case Err::OutOfModel: return "OutOfModel";
    case Err::MissingData: return "MissingData";
    case Err::MonoidViolation: return "MonoidViolation";
    case Err::NonTriangular: return "NonTriangular";
    case Err::NegativeMultiplicity: return "NegativeMultiplicity";
    case Err::NonIntegral: return "NonIntegral";
    case Err::SingularSystem: return "SingularSystem";
    case Err::NonIntegralSolution: return "NonIntegralSolution";
    case Err::ResidualNonzero: return "ResidualNonzero";
    case Err::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case Err::NonIntegralReconstruction: return "NonIntegralReconstruction";
    case Err::ValidationFailure: return "ValidationFailure";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
    case Err::CapViolation: return "CapViolation";
  }
  return "Unknown";
}

int err_exit_code(Err e) {
  switch (e) {
    case Err::Ok: return 0;
    case Err::MissingData: return 4;
    case Err::SingularSystem:
    case Err::NonIntegralSolution:
    case Err::ResidualNonzero: return 3;
    default: return 2;
  }
}

}  // namespace mgc
