#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isomon {

struct NonDivisible : std::runtime_error {
  std::string remainder;
  explicit NonDivisible(std::string rem)
      : std::runtime_error("non-divisible, remainder " + rem), remainder(std::move(rem)) {}
};

struct NonSquareLeading : std::runtime_error {
  NonSquareLeading() : std::runtime_error("leading coefficient is not a rational square") {}
};

struct Truncated : std::runtime_error {
  explicit Truncated(const std::string& what) : std::runtime_error("truncated: " + what) {}
};

struct SingularDiagonal : std::runtime_error {
  SingularDiagonal() : std::runtime_error("toeplitz diagonal is zero") {}
};

struct CoincidentNodes : std::runtime_error {
  std::size_t i, j;
  CoincidentNodes(std::size_t a, std::size_t b)
      : std::runtime_error("coincident nodes " + std::to_string(a) + " and " + std::to_string(b)),
        i(a), j(b) {}
};

struct IrrationalRoots : std::runtime_error {
  IrrationalRoots() : std::runtime_error("polynomial does not split over the rationals") {}
};

struct IrrationalPower : std::runtime_error {
  IrrationalPower() : std::runtime_error("fractional power of a rational is irrational") {}
};

struct NonPolynomialDet : std::runtime_error {
  NonPolynomialDet() : std::runtime_error("determinant keeps finite poles") {}
};

struct InconsistentIntegration : std::runtime_error {
  explicit InconsistentIntegration(const std::string& what)
      : std::runtime_error("inconsistent integration: " + what) {}
};

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace isomon
