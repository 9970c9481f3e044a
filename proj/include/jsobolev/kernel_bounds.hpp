#pragma once

#include <array>
#include <string>

#include "jsobolev/params.hpp"

namespace jsobolev {

/// phi_k^{(a,b)}(theta) = 2^{(a+b+1)/2} sin(theta/2)^{a+1/2} cos(theta/2)^{b+1/2} p_k^{(a,b)}(cos theta).
/// Orthonormal in L^2((0, pi), d theta). theta must lie strictly inside (0, pi).
double phi_eval(const JacobiParams& params, int k, double theta);

struct RegionBoundaries {
  double lower;  // M(theta) = max(theta/2, (3 theta - pi)/2)
  double upper;  // m(theta) = min(3 theta/2, (theta + pi)/2)
};

RegionBoundaries region_boundaries(double theta);

/// Number of terms so that r^N < 1e-16.
int abel_terms(double r);

/// Abel-damped kernel
///   sum_{j >= max(0,-d)} r^j phi_{j+d}^{first}(theta) phi_j^{second}(omega) / (j + m + 1),
/// truncated after `nterms` terms (0 selects abel_terms(r)).
double abel_kernel(const JacobiParams& first, const JacobiParams& second, double r, int d, int m,
                   double theta, double omega, int nterms = 0);

/// The three-piece majorant for the d = -1 kernel with first = (alpha, beta),
/// second = (alpha-1, beta-1). `region` is 0, 1 or 2 (see classify_region).
double kernel_majorant(double alpha, double beta, double theta, double omega, int region);

/// 0 when omega <= M(theta), 1 when M(theta) < omega < m(theta), 2 when
/// omega >= m(theta).
int classify_region(double theta, double omega);

struct KernelBoundReport {
  double alpha;
  double beta;
  int m;
  double r;
  int n_theta;
  int n_omega;
  std::array<double, 3> region_sup{};
  std::array<int, 3> region_count{};
};

/// Region-wise sup of |kernel| / majorant over an n_theta x n_omega grid
/// uniform in angle (cell midpoints). Points on a region boundary, and
/// diagonal points where the logarithmic majorant is infinite, are skipped.
KernelBoundReport check_kernel_bound(double alpha, double beta, int m, double r, int n_theta = 80,
                                     int n_omega = 80);

std::string to_json(const KernelBoundReport& report);

enum class HardyVariant { kStandard, kAdjoint };

struct HardyOptions {
  int r_points = 200;  // per half of (0, pi); geometric toward both ends
  int levels = 40;     // graded halvings toward each integration endpoint
  int order = 16;      // Gauss-Legendre points per panel
};

struct HardyResult {
  double value = 0.0;   // sup over the r-grid; +inf when an integral diverges
  bool finite = true;
  double argmax = 0.0;  // r attaining the grid sup
};

/// Product (int_r^pi U^p)^{1/p} (int_0^r V^{-p'})^{1/p'} for the standard
/// variant, or (int_0^r U^p)^{1/p} (int_r^pi V^{-p'})^{1/p'} for the adjoint,
/// with the weights built from W_{a,b}(t) = sin(t/2)^{(a+1/2)(2-p)} cos(t/2)^{(b+1/2)(2-p)}.
double hardy_product(double p, double alpha, double beta, HardyVariant variant, double r,
                     const HardyOptions& options = {});

/// Standard product with the pure-power integrands
/// t^{2a(1-p)+1} (pi-t)^{2b+1} and t^{2a-1} (pi-t)^{2b(1-p')-1}.
double hardy_power_product(double p, double alpha, double beta, double r,
                           const HardyOptions& options = {});

/// Sup of hardy_product over a log-spaced r-grid in (0, pi).
HardyResult hardy_supremum(double p, double alpha, double beta, HardyVariant variant,
                           const HardyOptions& options = {});

std::string to_string(HardyVariant variant);

}  // namespace jsobolev
