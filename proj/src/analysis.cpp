#include "jsobolev/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"
#include "jsobolev/sobolev.hpp"

namespace jsobolev {

CriticalWindow critical_window(double alpha, double beta, int m) {
  const SobolevParams sp(alpha, beta, m);  // domain check
  const double ga = alpha + m;
  const double gb = beta + m;
  const double lower = std::max(4.0 * (ga + 1.0) / (2.0 * ga + 3.0), 4.0 * (gb + 1.0) / (2.0 * gb + 3.0));
  const double upper = std::min(4.0 * (ga + 1.0) / (2.0 * ga + 1.0), 4.0 * (gb + 1.0) / (2.0 * gb + 1.0));
  return {lower, upper};
}

CriticalWindow jacobi_partial_sum_window(double alpha, double beta) {
  if (!(alpha >= -0.5) || !(beta >= -0.5)) {
    throw DomainError("Jacobi partial-sum window needs alpha, beta >= -1/2");
  }
  auto upper_of = [](double g) {
    const double den = 2.0 * g + 1.0;
    return den == 0.0 ? kInfinity : 4.0 * (g + 1.0) / den;
  };
  const double lower = std::max(4.0 * (alpha + 1.0) / (2.0 * alpha + 3.0), 4.0 * (beta + 1.0) / (2.0 * beta + 3.0));
  const double upper = std::min(upper_of(alpha), upper_of(beta));
  return {lower, upper};
}

GrowthFit fit_growth(std::vector<int> degrees, std::vector<double> values) {
  if (degrees.size() != values.size()) throw DomainError("fit_growth: size mismatch");
  if (degrees.size() < 5) throw DomainError("fit_growth needs at least 5 samples");
  const auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
  if (*lo < 1 || *hi < 10 * *lo) throw DomainError("fit_growth needs degrees spanning a decade");

  const auto count = static_cast<double>(degrees.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw NumericalError("fit_growth needs positive finite values");
    }
    const double x = std::log(static_cast<double>(degrees[i]));
    const double y = std::log(values[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  GrowthFit fit;
  const double vxx = sxx - sx * sx / count;
  const double vxy = sxy - sx * sy / count;
  const double vyy = syy - sy * sy / count;
  fit.exponent = vxy / vxx;
  fit.intercept = (sy - fit.exponent * sx) / count;
  fit.r2 = vyy <= 1e-300 ? 1.0 : std::clamp(vxy * vxy / (vxx * vyy), 0.0, 1.0);
  fit.degrees = std::move(degrees);
  fit.values = std::move(values);
  return fit;
}

std::string to_string(NormRegime regime) {
  switch (regime) {
    case NormRegime::kBounded: return "bounded";
    case NormRegime::kLogarithmic: return "logarithmic";
    case NormRegime::kPower: return "power";
  }
  return "unknown";
}

JacobiLpGrowth jacobi_lp_growth(const JacobiParams& params, double p, const std::vector<int>& degrees) {
  if (std::isnan(p) || p < 1.0) throw DomainError("exponent must satisfy p >= 1");
  if (!std::is_sorted(degrees.begin(), degrees.end()) ||
      std::adjacent_find(degrees.begin(), degrees.end()) != degrees.end()) {
    throw DomainError("degrees must be strictly increasing");
  }
  // The norm is invariant under (alpha, beta) -> (beta, alpha).
  const JacobiParams work = params.alpha() >= params.beta() ? params : params.swapped();
  std::vector<double> values;
  values.reserve(degrees.size());
  for (int n : degrees) values.push_back(jacobi_lp_norm(work, n, p));

  if (!degrees.empty() && std::isfinite(p)) {
    const double refined = jacobi_lp_norm(work, degrees.back(), p, 24);
    if (std::abs(refined - values.back()) > 1e-6 * std::abs(refined)) {
      throw NumericalError("jacobi_lp_growth: quadrature not converged at n=" +
                           std::to_string(degrees.back()));
    }
  }

  JacobiLpGrowth out;
  out.fit = fit_growth(degrees, std::move(values));
  const double g = work.alpha();
  out.critical_p = 2.0 * g + 1.0 <= 0.0 ? kInfinity : 4.0 * (g + 1.0) / (2.0 * g + 1.0);
  out.predicted_exponent = std::isinf(p) ? g + 0.5 : std::max(0.0, g + 0.5 - 2.0 * (g + 1.0) / p);
  if (p < out.critical_p) {
    out.regime = NormRegime::kBounded;
  } else if (p == out.critical_p) {
    out.regime = NormRegime::kLogarithmic;
  } else {
    out.regime = NormRegime::kPower;
  }
  return out;
}

namespace {

double conjugate_exponent(double p) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("norm product needs 1 < p < inf");
  return p / (p - 1.0);
}

}  // namespace

double q_sobolev_norm(const SobolevParams& sp, int n, double p) {
  if (n < 0) throw DomainError("degree must be >= 0");
  if (std::isnan(p) || p < 1.0 || std::isinf(p)) throw DomainError("exponent must satisfy 1 <= p < inf");
  double total = 0.0;
  for (int k = 0; k <= std::min(sp.m(), n); ++k) {
    const double scale = q_derivative_scale(sp, n, k);
    const double norm = jacobi_lp_norm(sp.jacobi().shifted(k), n - k, p);
    total += std::pow(scale * norm, p);
  }
  return std::pow(total, 1.0 / p);
}

double norm_product(const SobolevParams& sp, int n, double p) {
  const double q = conjugate_exponent(p);
  return q_sobolev_norm(sp, n, p) * q_sobolev_norm(sp, n, q);
}

double norm_product_generic(const SobolevParams& sp, int n, double p, int resolution) {
  const double q = conjugate_exponent(p);
  const FunctionBundle qn = q_bundle(sp, n);
  return sobolev_norm(sp, qn, p, resolution) * sobolev_norm(sp, qn, q, resolution);
}

double asym_scaled_ratio(const SobolevParams& sp, int k, int ell, int j) {
  if (k < 0 || ell < 0 || k > sp.m() || ell > sp.m()) {
    throw DomainError("asym ratio needs 0 <= k, ell <= m");
  }
  if (j < 0) throw DomainError("degree must be >= 0");
  const double rk = derivative_factor(sp.jacobi(), j, k);
  const double rl = derivative_factor(sp.jacobi(), j, ell);
  const double s = s_factor(sp, j);
  const int power = 2 * sp.m() - k - ell;
  return std::sqrt(rk) * std::sqrt(rl) / s * std::pow(j + 1.0, power);
}

AsymRatio asym_ratio_check(const SobolevParams& sp, int k, int ell, const std::vector<int>& degrees) {
  if (degrees.size() < 2) throw DomainError("asym_ratio_check needs at least two degrees");
  AsymRatio out;
  out.k = k;
  out.ell = ell;
  out.degrees = degrees;
  for (int j : degrees) out.values.push_back(asym_scaled_ratio(sp, k, ell, j));
  out.max_value = *std::max_element(out.values.begin(), out.values.end());

  // v(j) = A + B/(j+1) from the two largest degrees.
  const std::size_t last = degrees.size() - 1;
  const double u1 = 1.0 / (degrees[last - 1] + 1.0);
  const double u2 = 1.0 / (degrees[last] + 1.0);
  out.first_order = (out.values[last - 1] - out.values[last]) / (u1 - u2);
  out.limit = out.values[last] - out.first_order * u2;
  return out;
}

ConvergenceResult convergence_experiment(const SobolevParams& sp, const FunctionBundle& f, double p,
                                         const std::vector<int>& truncations, int resolution) {
  if (truncations.empty()) throw DomainError("no truncations given");
  if (!std::is_sorted(truncations.begin(), truncations.end()) || truncations.front() < 0) {
    throw DomainError("truncations must be non-negative and increasing");
  }
  const int nmax = truncations.back();
  const int nodes = resolution > 0 ? resolution : default_resolution(nmax, f);
  const Expansion full = partial_sum(sp, f, nmax, nodes);

  ConvergenceResult out;
  out.truncations = truncations;
  for (int n : truncations) {
    Expansion e{sp, std::vector<double>(full.coeffs.begin(), full.coeffs.begin() + n + 1)};
    const FunctionBundle diff = difference_bundle(expansion_bundle(e), f);
    out.errors.push_back(sobolev_norm(sp, diff, p, nodes));
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.errors.size(); ++i) {
    if (!(out.errors[i] < out.errors[i - 1])) out.strictly_decreasing = false;
  }
  const bool fittable = out.errors.size() >= 5 && truncations.front() >= 1 &&
                        truncations.back() >= 10 * truncations.front() &&
                        std::all_of(out.errors.begin(), out.errors.end(), [](double e) { return e > 0.0; });
  if (fittable) out.slope = fit_growth(truncations, out.errors).exponent;
  return out;
}

}  // namespace jsobolev
