#include "jsobolev/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "jsobolev/jacobi.hpp"

namespace jsobolev {
namespace {

constexpr double kPi = std::numbers::pi;

// Newton on p_n with p_n' = sqrt(lambda_n) p_{n-1}^{(a+1,b+1)}.
double polish_node(const OrthonormalRecurrence& base, const OrthonormalRecurrence& shifted,
                   double lambda_n, int n, double x) {
  const double sqrt_lambda = std::sqrt(lambda_n);
  for (int iter = 0; iter < 8; ++iter) {
    const double pn = base.value(n, x);
    const double dpn = sqrt_lambda * shifted.value(n - 1, x);
    const double next = std::clamp(x - pn / dpn, -1.0, 1.0);
    const bool done = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() *
                                                 std::max(std::abs(x), 1e-3);
    x = next;
    if (done) break;
  }
  return x;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NumericalError(std::string("non-finite integrand value in ") + what);
}

}  // namespace

QuadratureRule gauss_jacobi_rule(const JacobiParams& params, int npoints) {
  if (npoints < 1) {
    throw DomainError("quadrature order must be >= 1 (got " + std::to_string(npoints) + ")");
  }
  QuadratureRule rule{params, {}, {}};
  const auto n = static_cast<std::size_t>(npoints);
  if (npoints == 1) {
    rule.nodes = {recurrence_diagonal(params, 0)};
    rule.weights = {weight_mass(params)};
    return rule;
  }

  const RecurrenceCoefficients rc = orthonormal_recurrence(params, npoints);
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(rc.diagonal.data(), npoints);
  Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(rc.offdiagonal.data(), npoints - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("tridiagonal eigensolver failed for Gauss-Jacobi order " +
                         std::to_string(npoints));
  }

  const OrthonormalRecurrence base(params, npoints);
  const OrthonormalRecurrence shifted(params.shifted(1), npoints - 1);
  const double lambda_n = eigenvalue(params, npoints);

  rule.nodes.resize(n);
  rule.weights.resize(n);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = polish_node(base, shifted, lambda_n, npoints,
                                 solver.eigenvalues()[static_cast<Eigen::Index>(i)]);
    rule.nodes[i] = x;
    // Christoffel numbers: 1 / sum_{k<n} p_k(x_i)^2.
    base.sweep(x, values);
    double sum = 0.0;
    for (double v : values) sum += v * v;
    rule.weights[i] = 1.0 / sum;
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw NumericalError("Gauss-Jacobi nodes not strictly increasing at order " +
                           std::to_string(npoints));
    }
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(const JacobiParams& params,
                                                               int npoints) {
  using Key = std::tuple<double, double, int>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  const Key key{params.alpha(), params.beta(), npoints};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(params, npoints));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

double integrate(const QuadratureRule& rule, const RealFunction& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double v = f(rule.nodes[i]);
    require_finite(v, "integrate()");
    sum += rule.weights[i] * v;
  }
  return sum;
}

namespace {

double gauss_legendre_panel(const RealFunction& F, double lo, double hi, const QuadratureRule& gl) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double v = F(mid + half * gl.nodes[i]);
    require_finite(v, "graded panel");
    sum += gl.weights[i] * v;
  }
  return half * sum;
}

// Integral of F over the innermost piece of width w next to an endpoint,
// assuming F(e + t) ~ c t^s there. `sign` is +1 at a left end, -1 at a right end.
// Closes [end, end + sign*w] assuming F ~ c t^s there. Divergence needs two
// successive halvings to agree on s <= -1; roundoff noise does not.
GradedResult power_law_tail(const RealFunction& F, double end, double w, double sign) {
  const double f1 = F(end + sign * w);
  const double f2 = F(end + sign * 0.5 * w);
  const double f3 = F(end + sign * 0.25 * w);
  require_finite(f1, "graded tail");
  require_finite(f2, "graded tail");
  require_finite(f3, "graded tail");
  if (f1 == 0.0 && f2 == 0.0) return {0.0, true};
  if (f1 <= 0.0 || f2 <= 0.0 || f3 <= 0.0) return {std::abs(f1) * w, true};
  const double s1 = std::log2(f1 / f2);
  const double s2 = std::log2(f2 / f3);
  if (s1 <= -1.0 + 1e-9 && s2 <= -1.0 + 1e-9 && std::abs(s1 - s2) < 0.05) return {kInfinity, false};
  if (s1 <= -1.0 + 1e-9) return {f1 * w, true};
  return {f1 * w / (s1 + 1.0), true};
}

}  // namespace

GradedResult integrate_graded(const RealFunction& F, double a, double b, const GradedOptions& options) {
  if (!(b > a)) throw DomainError("integrate_graded needs a < b");
  if (options.order < 1 || options.levels < 0) throw DomainError("invalid graded options");
  const auto gl = cached_gauss_jacobi_rule(JacobiParams(0.0, 0.0), options.order);

  GradedResult result;
  double lo = a;
  double hi = b;
  if (options.grade_left && options.grade_right) {
    const double mid = 0.5 * (a + b);
    GradedOptions left = options;
    left.grade_right = false;
    GradedOptions right = options;
    right.grade_left = false;
    const GradedResult l = integrate_graded(F, a, mid, left);
    const GradedResult r = integrate_graded(F, mid, b, right);
    return {l.value + r.value, l.finite && r.finite};
  }
  if (options.grade_left) {
    double width = b - a;
    for (int level = 0; level < options.levels; ++level) {
      result.value += gauss_legendre_panel(F, a + 0.5 * width, a + width, *gl);
      width *= 0.5;
    }
    const GradedResult tail = power_law_tail(F, a, width, +1.0);
    result.value += tail.value;
    result.finite = tail.finite;
    return result;
  }
  if (options.grade_right) {
    double width = b - a;
    for (int level = 0; level < options.levels; ++level) {
      result.value += gauss_legendre_panel(F, b - width, b - 0.5 * width, *gl);
      width *= 0.5;
    }
    const GradedResult tail = power_law_tail(F, b, width, -1.0);
    result.value += tail.value;
    result.finite = tail.finite;
    return result;
  }
  result.value = gauss_legendre_panel(F, lo, hi, *gl);
  return result;
}

namespace {

// 2^{a+b+1} sin^{2a+1}(t/2) cos^{2b+1}(t/2): dmu_{a,b} in the angle variable.
double angular_weight(const JacobiParams& params, double theta) {
  const double a = params.alpha();
  const double b = params.beta();
  return std::exp((a + b + 1.0) * std::numbers::ln2 + (2.0 * a + 1.0) * std::log(std::sin(0.5 * theta)) +
                  (2.0 * b + 1.0) * std::log(std::cos(0.5 * theta)));
}

// Smallest angle used by the graded endpoint panels; below it cos(theta)
// no longer resolves 1 - x to useful relative precision.
constexpr double kMinAngle = 1e-6;

}  // namespace

double lp_norm(const RealFunction& f, double p, const JacobiParams& params, int resolution) {
  if (std::isnan(p) || p < 1.0) throw DomainError("L^p exponent must satisfy p >= 1");
  if (resolution < 1) throw DomainError("lp_norm resolution must be >= 1");

  if (std::isinf(p)) {
    const int npts = 32 * resolution;
    double best = 0.0;
    for (int i = 0; i < npts; ++i) {
      const double x = std::cos((i + 0.5) * kPi / npts);
      const double v = std::abs(f(x));
      if (std::isnan(v)) throw NumericalError("NaN in lp_norm(p=inf)");
      best = std::max(best, v);
    }
    return best;
  }

  const RealFunction integrand = [&](double theta) {
    const double v = f(std::cos(theta));
    if (v == 0.0) return 0.0;
    return std::pow(std::abs(v), p) * angular_weight(params, theta);
  };

  const auto gl = cached_gauss_jacobi_rule(JacobiParams(0.0, 0.0), 16);
  const double h = kPi / resolution;
  const int levels = std::max(0, static_cast<int>(std::floor(std::log2(h / kMinAngle))));

  double sum = 0.0;
  bool finite = true;
  if (resolution == 1) {
    const GradedResult r = integrate_graded(integrand, 0.0, kPi, {16, levels, true, true});
    sum = r.value;
    finite = r.finite;
  } else {
    const GradedResult left = integrate_graded(integrand, 0.0, h, {16, levels, true, false});
    const GradedResult right = integrate_graded(integrand, kPi - h, kPi, {16, levels, false, true});
    sum = left.value + right.value;
    finite = left.finite && right.finite;
    for (int i = 1; i + 1 < resolution; ++i) {
      sum += gauss_legendre_panel(integrand, i * h, (i + 1) * h, *gl);
    }
  }
  if (!finite) return kInfinity;
  return std::pow(sum, 1.0 / p);
}

namespace {

// Zeros of p_n in the angle variable, increasing, refined by Newton in theta.
std::vector<double> angular_zeros(const JacobiParams& params, int n) {
  const auto rule = cached_gauss_jacobi_rule(params, n);
  const OrthonormalRecurrence base(params, n);
  const OrthonormalRecurrence shifted(params.shifted(1), std::max(n - 1, 0));
  const double sqrt_lambda = std::sqrt(eigenvalue(params, n));
  std::vector<double> theta(rule->nodes.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    double t = std::acos(rule->nodes[rule->nodes.size() - 1 - i]);
    for (int iter = 0; iter < 2; ++iter) {
      const double c = std::cos(t);
      const double value = base.value(n, c);
      const double deriv = -std::sin(t) * sqrt_lambda * shifted.value(n - 1, c);
      if (deriv == 0.0) break;
      t -= value / deriv;
    }
    theta[i] = t;
  }
  return theta;
}

}  // namespace

double jacobi_lp_norm(const JacobiParams& params, int n, double p, int panel_order) {
  if (n < 0) throw DomainError("degree must be >= 0");
  if (std::isnan(p) || p < 1.0) throw DomainError("L^p exponent must satisfy p >= 1");
  if (panel_order < 2) throw DomainError("panel order must be >= 2");

  const OrthonormalRecurrence base(params, n);
  if (std::isinf(p)) {
    const int npts = 32 * std::max(n, 1);
    double best = std::max(std::abs(base.value(n, 1.0)), std::abs(base.value(n, -1.0)));
    for (int i = 0; i < npts; ++i) {
      best = std::max(best, std::abs(base.value(n, std::cos((i + 0.5) * kPi / npts))));
    }
    return best;
  }

  const double a = params.alpha();
  const double b = params.beta();
  std::vector<double> breaks;
  breaks.reserve(static_cast<std::size_t>(n) + 2);
  breaks.push_back(0.0);
  if (n > 0) {
    const auto zeros = angular_zeros(params, n);
    breaks.insert(breaks.end(), zeros.begin(), zeros.end());
  }
  breaks.push_back(kPi);

  const double log_prefactor = (a + b + 1.0) * std::numbers::ln2;
  double sum = 0.0;
  const std::size_t panels = breaks.size() - 1;
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = breaks[i];
    const double hi = breaks[i + 1];
    const bool left_is_end = (i == 0);
    const bool right_is_end = (i + 1 == panels);
    // Exponents carried by the rule's weight (1-t)^{e_right} (1+t)^{e_left}.
    const double e_left = left_is_end ? 2.0 * a + 1.0 : p;
    const double e_right = right_is_end ? 2.0 * b + 1.0 : p;
    const auto rule = cached_gauss_jacobi_rule(JacobiParams(e_right, e_left), panel_order);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double panel = 0.0;
    for (std::size_t k = 0; k < rule->nodes.size(); ++k) {
      const double t = rule->nodes[k];
      const double theta = mid + half * t;
      const double dl = half * (1.0 + t);  // theta - lo
      const double dr = half * (1.0 - t);  // hi - theta
      double g = base.value(n, std::cos(theta));
      double log_w = log_prefactor;
      if (left_is_end) {
        log_w += (2.0 * a + 1.0) * std::log(std::sin(0.5 * theta) / theta);
      } else {
        g /= dl;
        log_w += (2.0 * a + 1.0) * std::log(std::sin(0.5 * theta));
      }
      if (right_is_end) {
        log_w += (2.0 * b + 1.0) * std::log(std::cos(0.5 * theta) / (kPi - theta));
      } else {
        g /= dr;
        log_w += (2.0 * b + 1.0) * std::log(std::cos(0.5 * theta));
      }
      panel += rule->weights[k] * std::pow(std::abs(g), p) * std::exp(log_w);
    }
    sum += std::pow(half, e_left + e_right + 1.0) * panel;
  }
  require_finite(sum, "jacobi_lp_norm");
  return std::pow(sum, 1.0 / p);
}

}  // namespace jsobolev
