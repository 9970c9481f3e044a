#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jsobolev/params.hpp"

namespace jsobolev {

/// A function on [-1,1] together with its derivatives up to `max_order`.
struct FunctionBundle {
  std::string name;
  int max_order = 0;
  /// Exact polynomial degree when `polynomial`, otherwise a resolution hint
  /// (roughly the degree needed to resolve the function).
  int degree_proxy = 0;
  bool polynomial = false;
  std::function<double(int, double)> eval;

  /// k-th derivative at x; throws DomainError when k > max_order.
  double operator()(int k, double x) const;
};

/// sum_i coeffs[i] x^i.
FunctionBundle polynomial_bundle(std::vector<double> coeffs);

/// Constant c (all derivatives zero).
FunctionBundle constant_bundle(double c);

/// e^x.
FunctionBundle exp_bundle(int max_order = 8);

/// (1-x)^gamma. Derivatives are singular at x = 1 when gamma < k.
FunctionBundle one_minus_x_power_bundle(double gamma, int max_order = 8);

/// sin(k x).
FunctionBundle sine_bundle(double k, int max_order = 8);

/// f - g, derivative by derivative.
FunctionBundle difference_bundle(const FunctionBundle& f, const FunctionBundle& g);

}  // namespace jsobolev
