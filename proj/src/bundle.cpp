#include "jsobolev/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>

namespace jsobolev {

double FunctionBundle::operator()(int k, double x) const {
  if (k < 0 || k > max_order) {
    throw DomainError("bundle '" + name + "' has no derivative of order " + std::to_string(k) +
                      " (max " + std::to_string(max_order) + ")");
  }
  return eval(k, x);
}

FunctionBundle polynomial_bundle(std::vector<double> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(0.0);
  const int degree = static_cast<int>(coeffs.size()) - 1;
  std::ostringstream name;
  name << "poly:";
  for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i];

  auto c = std::make_shared<const std::vector<double>>(std::move(coeffs));
  FunctionBundle bundle;
  bundle.name = name.str();
  bundle.max_order = 64;
  bundle.degree_proxy = degree;
  bundle.polynomial = true;
  bundle.eval = [c, degree](int k, double x) {
    if (k > degree) return 0.0;
    // Horner on the k-th derivative coefficients i!/(i-k)! c_i.
    double acc = 0.0;
    for (int i = degree; i >= k; --i) {
      double falling = 1.0;
      for (int j = 0; j < k; ++j) falling *= (i - j);
      acc = acc * x + falling * (*c)[static_cast<std::size_t>(i)];
    }
    return acc;
  };
  return bundle;
}

FunctionBundle constant_bundle(double c) { return polynomial_bundle({c}); }

FunctionBundle exp_bundle(int max_order) {
  FunctionBundle bundle;
  bundle.name = "expx";
  bundle.max_order = max_order;
  bundle.degree_proxy = 32;
  bundle.eval = [](int, double x) { return std::exp(x); };
  return bundle;
}

FunctionBundle one_minus_x_power_bundle(double gamma, int max_order) {
  FunctionBundle bundle;
  std::ostringstream name;
  name << "onemx:" << gamma;
  bundle.name = name.str();
  bundle.max_order = max_order;
  bundle.degree_proxy = 1024;
  bundle.eval = [gamma](int k, double x) {
    // d^k/dx^k (1-x)^g = (-1)^k g (g-1) ... (g-k+1) (1-x)^{g-k}
    double factor = 1.0;
    for (int j = 0; j < k; ++j) factor *= -(gamma - j);
    if (factor == 0.0) return 0.0;
    return factor * std::pow(1.0 - x, gamma - k);
  };
  return bundle;
}

FunctionBundle sine_bundle(double k, int max_order) {
  FunctionBundle bundle;
  std::ostringstream name;
  name << "sin:" << k;
  bundle.name = name.str();
  bundle.max_order = max_order;
  bundle.degree_proxy = 32 + static_cast<int>(std::ceil(2.0 * std::abs(k)));
  bundle.eval = [k](int order, double x) {
    // d^j sin(kx) = k^j sin(kx + j pi/2)
    return std::pow(k, order) * std::sin(k * x + order * 0.5 * std::numbers::pi);
  };
  return bundle;
}

FunctionBundle difference_bundle(const FunctionBundle& f, const FunctionBundle& g) {
  FunctionBundle bundle;
  bundle.name = f.name + "-" + g.name;
  bundle.max_order = std::min(f.max_order, g.max_order);
  bundle.polynomial = f.polynomial && g.polynomial;
  bundle.degree_proxy = std::max(f.degree_proxy, g.degree_proxy);
  bundle.eval = [f, g](int k, double x) { return f.eval(k, x) - g.eval(k, x); };
  return bundle;
}

}  // namespace jsobolev
