#include "jsobolev/kernel_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <nlohmann/json.hpp>

#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"

namespace jsobolev {
namespace {

constexpr double kPi = std::numbers::pi;

void check_angle(double theta) {
  if (!(theta > 0.0 && theta < kPi)) {
    throw DomainError("angle must lie strictly inside (0, pi) (got " + std::to_string(theta) + ")");
  }
}

double phi_prefactor(const JacobiParams& params, double theta) {
  const double a = params.alpha();
  const double b = params.beta();
  return std::exp(0.5 * (a + b + 1.0) * std::numbers::ln2 + (a + 0.5) * std::log(std::sin(0.5 * theta)) +
                  (b + 0.5) * std::log(std::cos(0.5 * theta)));
}

// phi_0 .. phi_{count-1} at theta.
std::vector<double> phi_sweep(const JacobiParams& params, double theta, int count) {
  std::vector<double> values(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return values;
  const OrthonormalRecurrence rec(params, count - 1);
  rec.sweep(std::cos(theta), values);
  const double pre = phi_prefactor(params, theta);
  for (double& v : values) v *= pre;
  return values;
}

}  // namespace

double phi_eval(const JacobiParams& params, int k, double theta) {
  check_angle(theta);
  if (k < 0) throw DomainError("degree must be >= 0");
  return phi_prefactor(params, theta) * orthonormal_eval(params, k, std::cos(theta));
}

RegionBoundaries region_boundaries(double theta) {
  check_angle(theta);
  return {std::max(0.5 * theta, 0.5 * (3.0 * theta - kPi)), std::min(1.5 * theta, 0.5 * (theta + kPi))};
}

int abel_terms(double r) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("Abel parameter must satisfy 0 < r < 1");
  return static_cast<int>(std::ceil(std::log(1e-16) / std::log(r))) + 1;
}

double abel_kernel(const JacobiParams& first, const JacobiParams& second, double r, int d, int m,
                   double theta, double omega, int nterms) {
  check_angle(theta);
  check_angle(omega);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("Abel parameter must satisfy 0 < r < 1");
  if (nterms <= 0) nterms = abel_terms(r);
  const int j0 = std::max(0, -d);
  const int jmax = j0 + nterms - 1;
  const auto phi1 = phi_sweep(first, theta, jmax + d + 1);
  const auto phi2 = phi_sweep(second, omega, jmax + 1);
  double sum = 0.0;
  double rj = std::pow(r, j0);
  for (int j = j0; j <= jmax; ++j) {
    sum += rj * phi1[static_cast<std::size_t>(j + d)] * phi2[static_cast<std::size_t>(j)] / (j + m + 1.0);
    rj *= r;
  }
  return sum;
}

int classify_region(double theta, double omega) {
  const RegionBoundaries rb = region_boundaries(theta);
  if (omega <= rb.lower) return 0;
  if (omega < rb.upper) return 1;
  return 2;
}

double kernel_majorant(double alpha, double beta, double theta, double omega, int region) {
  switch (region) {
    case 0:
      return std::pow(omega / theta, alpha - 0.5) * std::pow((kPi - theta) / (kPi - omega), beta + 0.5);
    case 1:
      return std::log(2.0 * theta / std::abs(theta - omega));
    case 2:
      return std::pow(theta / omega, alpha + 0.5) * std::pow((kPi - omega) / (kPi - theta), beta - 0.5);
    default:
      throw DomainError("region index must be 0, 1 or 2");
  }
}

KernelBoundReport check_kernel_bound(double alpha, double beta, int m, double r, int n_theta, int n_omega) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("kernel bound check needs alpha, beta > 0");
  if (!(r >= 0.9 && r <= 0.995)) throw DomainError("kernel bound check needs r in [0.9, 0.995]");
  if (m < 0) throw DomainError("m must be >= 0");
  if (n_theta < 2 || n_omega < 2) throw DomainError("grid needs at least 2 points per axis");

  const JacobiParams first(alpha, beta);
  const JacobiParams second(alpha - 1.0, beta - 1.0);
  const int nterms = abel_terms(r);
  const int jmax = nterms;  // d = -1: j = 1 .. nterms

  std::vector<double> thetas(static_cast<std::size_t>(n_theta));
  std::vector<double> omegas(static_cast<std::size_t>(n_omega));
  for (int i = 0; i < n_theta; ++i) thetas[static_cast<std::size_t>(i)] = (i + 0.5) * kPi / n_theta;
  for (int i = 0; i < n_omega; ++i) omegas[static_cast<std::size_t>(i)] = (i + 0.5) * kPi / n_omega;

  std::vector<std::vector<double>> phi1;
  std::vector<std::vector<double>> phi2;
  for (double t : thetas) phi1.push_back(phi_sweep(first, t, jmax));
  for (double w : omegas) phi2.push_back(phi_sweep(second, w, jmax + 1));
  std::vector<double> damping(static_cast<std::size_t>(jmax) + 1);
  for (int j = 1; j <= jmax; ++j) damping[static_cast<std::size_t>(j)] = std::pow(r, j) / (j + m + 1.0);

  KernelBoundReport report{alpha, beta, m, r, n_theta, n_omega, {0.0, 0.0, 0.0}, {0, 0, 0}};
  for (std::size_t it = 0; it < thetas.size(); ++it) {
    const double theta = thetas[it];
    const RegionBoundaries rb = region_boundaries(theta);
    for (std::size_t iw = 0; iw < omegas.size(); ++iw) {
      const double omega = omegas[iw];
      if (omega == rb.lower || omega == rb.upper || omega == theta) continue;
      const int region = classify_region(theta, omega);
      double kernel = 0.0;
      const auto& a = phi1[it];
      const auto& b = phi2[iw];
      for (int j = 1; j <= jmax; ++j) {
        const auto jj = static_cast<std::size_t>(j);
        kernel += damping[jj] * a[jj - 1] * b[jj];
      }
      const double ratio = std::abs(kernel) / kernel_majorant(alpha, beta, theta, omega, region);
      auto& sup = report.region_sup[static_cast<std::size_t>(region)];
      sup = std::max(sup, ratio);
      ++report.region_count[static_cast<std::size_t>(region)];
    }
  }
  return report;
}

std::string to_json(const KernelBoundReport& report) {
  nlohmann::json j;
  j["alpha"] = report.alpha;
  j["beta"] = report.beta;
  j["m"] = report.m;
  j["r"] = report.r;
  j["region_sup"] = report.region_sup;
  j["grid"] = {{"n_theta", report.n_theta}, {"n_omega", report.n_omega}};
  return j.dump();
}

namespace {

// log W_{a,b}(t) = (a+1/2)(2-p) log sin(t/2) + (b+1/2)(2-p) log cos(t/2)
double log_w(double a, double b, double p, double t) {
  return (a + 0.5) * (2.0 - p) * std::log(std::sin(0.5 * t)) +
         (b + 0.5) * (2.0 - p) * std::log(std::cos(0.5 * t));
}

void check_hardy(double p, double alpha, double beta) {
  if (!(p > 1.0) || std::isinf(p)) throw DomainError("Hardy check needs 1 < p < inf");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("Hardy check needs alpha, beta > 0");
}

double panel(const RealFunction& f, double a, double b, const QuadratureRule& rule) {
  const double half = 0.5 * (b - a);
  const double centre = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    sum += rule.weights[static_cast<std::size_t>(i)] * f(centre + half * rule.nodes[static_cast<std::size_t>(i)]);
  }
  return half * sum;
}

// Geometric panels toward a regular end, closed by one last panel.
double graded_to_regular(const RealFunction& f, double a, double b, bool toward_b, const HardyOptions& options) {
  const auto gl = cached_gauss_jacobi_rule(JacobiParams(0.0, 0.0), options.order);
  double width = b - a;
  double total = 0.0;
  for (int level = 0; level < options.levels; ++level) {
    total += toward_b ? panel(f, b - width, b - 0.5 * width, *gl)
                      : panel(f, a + 0.5 * width, a + width, *gl);
    width *= 0.5;
  }
  return total + (toward_b ? panel(f, b - width, b, *gl) : panel(f, a, a + width, *gl));
}

// Integral over (a, b) where exactly one end is singular (0 or pi). Returns
// +inf when the power-law tail at the singular end is not integrable.
double hardy_integral(const RealFunction& f, double a, double b, bool singular_left, const HardyOptions& options) {
  const double mid = 0.5 * (a + b);
  // Keep the innermost panel resolvable next to pi in double precision.
  const int depth = std::min(options.levels, static_cast<int>(std::floor(std::log2(0.5 * (b - a) / 1e-13))));
  const GradedOptions graded{options.order, std::max(depth, 1), singular_left, !singular_left};
  const GradedResult sing = singular_left ? integrate_graded(f, a, mid, graded) : integrate_graded(f, mid, b, graded);
  if (!sing.finite) return kInfinity;
  const double reg = singular_left ? graded_to_regular(f, mid, b, true, options)
                                   : graded_to_regular(f, a, mid, false, options);
  return sing.value + reg;
}

}  // namespace

double hardy_product(double p, double alpha, double beta, HardyVariant variant, double r,
                     const HardyOptions& options) {
  check_hardy(p, alpha, beta);
  if (!(r > 0.0 && r < kPi)) throw DomainError("Hardy split point must lie in (0, pi)");
  const double q = p / (p - 1.0);

  // log U^p and log V^p; V^{-p'} = exp(-log V^p / (p-1)).
  RealFunction u_p;
  RealFunction v_neg;
  if (variant == HardyVariant::kStandard) {
    auto shape = [=](double t) { return p * (beta + 0.5) * std::log(kPi - t) - p * (alpha - 0.5) * std::log(t); };
    u_p = [=](double t) { return std::exp(log_w(alpha, beta, p, t) + shape(t)); };
    v_neg = [=](double t) { return std::exp(-(log_w(alpha - 1.0, beta - 1.0, p, t) + shape(t)) / (p - 1.0)); };
    const double upper = hardy_integral(u_p, r, kPi, false, options);
    const double lower = hardy_integral(v_neg, 0.0, r, true, options);
    return std::pow(upper, 1.0 / p) * std::pow(lower, 1.0 / q);
  }
  auto shape = [=](double t) { return p * (alpha + 0.5) * std::log(t) - p * (beta - 0.5) * std::log(kPi - t); };
  u_p = [=](double t) { return std::exp(log_w(alpha, beta, p, t) + shape(t)); };
  v_neg = [=](double t) { return std::exp(-(log_w(alpha - 1.0, beta - 1.0, p, t) + shape(t)) / (p - 1.0)); };
  const double lower = hardy_integral(u_p, 0.0, r, true, options);
  const double upper = hardy_integral(v_neg, r, kPi, false, options);
  return std::pow(lower, 1.0 / p) * std::pow(upper, 1.0 / q);
}

double hardy_power_product(double p, double alpha, double beta, double r, const HardyOptions& options) {
  check_hardy(p, alpha, beta);
  if (!(r > 0.0 && r < kPi)) throw DomainError("Hardy split point must lie in (0, pi)");
  const double q = p / (p - 1.0);
  const RealFunction a = [=](double t) {
    return std::pow(t, 2.0 * alpha * (1.0 - p) + 1.0) * std::pow(kPi - t, 2.0 * beta + 1.0);
  };
  const RealFunction b = [=](double t) {
    return std::pow(t, 2.0 * alpha - 1.0) * std::pow(kPi - t, 2.0 * beta * (1.0 - q) - 1.0);
  };
  return std::pow(hardy_integral(a, r, kPi, false, options), 1.0 / p) *
         std::pow(hardy_integral(b, 0.0, r, true, options), 1.0 / q);
}

HardyResult hardy_supremum(double p, double alpha, double beta, HardyVariant variant,
                           const HardyOptions& options) {
  check_hardy(p, alpha, beta);
  if (options.r_points < 2) throw DomainError("Hardy r-grid needs at least 2 points per half");
  HardyResult best;
  best.value = 0.0;
  for (int i = 0; i < options.r_points; ++i) {
    // Geometric from pi/2 down to pi/2 * 1e-6, mirrored toward pi.
    const double t = static_cast<double>(i) / (options.r_points - 1);
    const double offset = 0.5 * kPi * std::pow(10.0, -6.0 * t);
    for (double r : {offset, kPi - offset}) {
      const double v = hardy_product(p, alpha, beta, variant, r, options);
      if (std::isinf(v)) return {kInfinity, false, r};
      if (v > best.value) {
        best.value = v;
        best.argmax = r;
      }
    }
  }
  return best;
}

std::string to_string(HardyVariant variant) {
  return variant == HardyVariant::kStandard ? "standard" : "adjoint";
}

}  // namespace jsobolev
