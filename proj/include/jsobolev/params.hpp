#pragma once

#include <stdexcept>
#include <string>

namespace jsobolev {

/// Raised when an input violates a documented precondition (parameter domain,
/// degree, exponent, missing derivative order, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exponents of the Jacobi weight (1-x)^alpha (1+x)^beta on [-1,1].
class JacobiParams {
public:
  JacobiParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// (alpha+k, beta+k), the weight attached to the k-th derivative.
  JacobiParams shifted(double k) const { return {alpha_ + k, beta_ + k}; }
  JacobiParams swapped() const { return {beta_, alpha_}; }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

private:
  double alpha_;
  double beta_;
};

/// (alpha, beta, m) for the Sobolev inner product with derivatives up to m.
class SobolevParams {
public:
  SobolevParams(double alpha, double beta, int m);

  double alpha() const noexcept { return jacobi_.alpha(); }
  double beta() const noexcept { return jacobi_.beta(); }
  int m() const noexcept { return m_; }
  const JacobiParams& jacobi() const noexcept { return jacobi_; }

  friend bool operator==(const SobolevParams&, const SobolevParams&) = default;

private:
  JacobiParams jacobi_;
  int m_;
};

std::string to_string(const JacobiParams& params);
std::string to_string(const SobolevParams& params);

}  // namespace jsobolev
