#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "jsobolev/params.hpp"

namespace jsobolev {

using RealFunction = std::function<double(double)>;

/// n-point Gauss rule for the measure (1-x)^alpha (1+x)^beta dx on [-1,1].
/// Nodes are strictly increasing, weights positive; exact for polynomials of
/// degree <= 2n-1.
struct QuadratureRule {
  JacobiParams params;
  std::vector<double> nodes;
  std::vector<double> weights;

  int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Golub-Welsch eigenvalues of the Jacobi matrix, Newton-polished against
/// p_n, with weights 1 / sum_{k<n} p_k(x_i)^2.
QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int npoints);

/// Same rule, memoized per (alpha, beta, npoints). Safe to call concurrently.
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(const JacobiParams& params,
                                                               int npoints);

/// sum_i w_i f(x_i). Throws NumericalError if f is not finite at a node.
double integrate(const QuadratureRule& rule, const RealFunction& f);

/// Options for integrate_graded().
struct GradedOptions {
  int order = 16;          // Gauss-Legendre points per panel
  int levels = 20;         // halvings toward each graded end
  bool grade_left = true;
  bool grade_right = true;
};

struct GradedResult {
  double value = 0.0;
  bool finite = true;  // false when an endpoint tail is not integrable
};

/// Integral of F over [a,b] with panels halving geometrically toward the
/// graded ends. The piece left over at a graded end is closed with a local
/// power-law fit F ~ c t^s; s <= -1 marks the integral as divergent.
GradedResult integrate_graded(const RealFunction& F, double a, double b,
                              const GradedOptions& options = {});

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Weighted L^p norm (int |f|^p dmu_{alpha,beta})^{1/p}; p = kInfinity gives
/// the maximum over an arccos-uniform grid of 32 * resolution points.
///
/// For finite p the integral is taken in theta (x = cos theta) over
/// `resolution` uniform panels, with geometric grading into both endpoints so
/// that algebraic endpoint behaviour of f is resolved.
double lp_norm(const RealFunction& f, double p, const JacobiParams& params, int resolution);

/// ||p_n^{(alpha,beta)}||_{L^p_{alpha,beta}} on panels between consecutive
/// zeros of p_n. Each panel uses a Gauss-Jacobi rule whose weight carries the
/// |zero-distance|^p factors, so the non-smooth |p_n|^p is integrated to
/// near machine precision.
double jacobi_lp_norm(const JacobiParams& params, int n, double p, int panel_order = 12);

}  // namespace jsobolev
