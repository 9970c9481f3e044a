#pragma once

#include <string>
#include <vector>

#include "jsobolev/bundle.hpp"
#include "jsobolev/params.hpp"

namespace jsobolev {

/// Open interval (p_lower, p_upper) of exponents.
struct CriticalWindow {
  double p_lower;
  double p_upper;

  /// Strict membership: the endpoints themselves count as outside.
  bool contains(double p) const noexcept { return p > p_lower && p < p_upper; }
};

/// Exponent window on which the Jacobi-Sobolev partial sums are uniformly
/// bounded in W^{p,m}_{alpha,beta}:
///   max_{g in {alpha+m, beta+m}} 4(g+1)/(2g+3) < p < min_g 4(g+1)/(2g+1).
CriticalWindow critical_window(double alpha, double beta, int m);

/// Classical window for Jacobi partial sums in L^p_{alpha,beta},
/// alpha, beta >= -1/2. An upper bound of +inf is returned when
/// max(alpha, beta) == -1/2.
CriticalWindow jacobi_partial_sum_window(double alpha, double beta);

/// Least-squares fit of log(value) against log(degree).
struct GrowthFit {
  std::vector<int> degrees;
  std::vector<double> values;
  double exponent = 0.0;  // slope
  double intercept = 0.0;
  double r2 = 1.0;
};

/// Fits log-log slope. Requires >= 5 samples spanning at least one decade.
GrowthFit fit_growth(std::vector<int> degrees, std::vector<double> values);

enum class NormRegime { kBounded, kLogarithmic, kPower };

std::string to_string(NormRegime regime);

struct JacobiLpGrowth {
  GrowthFit fit;
  double critical_p;         // 4(g+1)/(2g+1), g = max(alpha, beta)
  double predicted_exponent; // max(0, g + 1/2 - 2(g+1)/p)
  NormRegime regime;
};

/// ||p_n^{(alpha,beta)}||_{L^p_{alpha,beta}} over `degrees`, with a fit and the
/// regime of p relative to the critical exponent. The largest degree is
/// recomputed at doubled panel order; a relative change above 1e-6 raises
/// NumericalError.
JacobiLpGrowth jacobi_lp_growth(const JacobiParams& params, double p, const std::vector<int>& degrees);

/// ||q_n||_{W^{p,m}} from the closed form
///   sum_k (r_{n,k}/s_{n,m})^{p/2} ||p_{n-k}^{(alpha+k,beta+k)}||_p^p.
double q_sobolev_norm(const SobolevParams& sp, int n, double p);

/// ||q_n||_{W^{p,m}} ||q_n||_{W^{p',m}} with 1/p + 1/p' = 1.
double norm_product(const SobolevParams& sp, int n, double p);

/// Same product with both factors taken from sobolev_norm() on the q_n
/// bundle (generic quadrature, `resolution` panels).
double norm_product_generic(const SobolevParams& sp, int n, double p, int resolution);

struct AsymRatio {
  int k = 0;
  int ell = 0;
  std::vector<int> degrees;
  std::vector<double> values;  // sqrt(r_{j,k} r_{j,ell}) / s_{j,m} * (j+1)^{2m-k-ell}
  double limit = 0.0;          // A, Richardson estimate from the two largest degrees
  double first_order = 0.0;    // B
  double max_value = 0.0;
};

/// Scaled ratio sqrt(r_{j,k} r_{j,ell}) / s_{j,m} * (j+1)^{2m-k-ell}.
double asym_scaled_ratio(const SobolevParams& sp, int k, int ell, int j);

AsymRatio asym_ratio_check(const SobolevParams& sp, int k, int ell, const std::vector<int>& degrees);

struct ConvergenceResult {
  std::vector<int> truncations;
  std::vector<double> errors;  // ||S_n f - f||_{W^{p,m}}
  bool strictly_decreasing = false;
  double slope = 0.0;          // log-log slope of errors (0 when not fittable)
};

/// ||S_n f - f||_{W^{p,m}} for each truncation n. `resolution` <= 0 picks
/// defaults from the bundle and the largest truncation.
ConvergenceResult convergence_experiment(const SobolevParams& sp, const FunctionBundle& f, double p,
                                         const std::vector<int>& truncations, int resolution = 0);

}  // namespace jsobolev
