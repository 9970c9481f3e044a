#include "jsobolev/jacobi.hpp"

#include <cmath>
#include <string>

namespace jsobolev {
namespace {

void check_degree(int n) {
  if (n < 0) throw DomainError("polynomial degree must be >= 0 (got " + std::to_string(n) + ")");
}

void check_point(double x) {
  if (std::isnan(x)) throw DomainError("evaluation point is NaN");
  if (x < -1.0 || x > 1.0) {
    throw DomainError("evaluation point outside [-1,1]: " + std::to_string(x));
  }
}

// log of (2n+a+b+1) Gamma(n+a+b+1); at n = 0 this is log Gamma(a+b+2), which
// stays well defined when a+b+1 <= 0.
double log_leading_gamma(double a, double b, int n) {
  if (n == 0) return std::lgamma(a + b + 2.0);
  return std::log(2.0 * n + a + b + 1.0) + std::lgamma(n + a + b + 1.0);
}

}  // namespace

double recurrence_diagonal(const JacobiParams& params, int j) {
  const double a = params.alpha();
  const double b = params.beta();
  if (j == 0) return (b - a) / (a + b + 2.0);
  const double s = 2.0 * j + a + b;
  return (b * b - a * a) / (s * (s + 2.0));
}

double recurrence_offdiagonal(const JacobiParams& params, int j) {
  const double a = params.alpha();
  const double b = params.beta();
  if (j < 1) throw DomainError("off-diagonal recurrence index must be >= 1");
  if (j == 1) {
    const double s = a + b + 2.0;
    return std::sqrt(4.0 * (a + 1.0) * (b + 1.0) / (s * s * (s + 1.0)));
  }
  const double s = 2.0 * j + a + b;
  const double num = j * (j + a) * (j + b) * (j + a + b);
  return 2.0 / s * std::sqrt(num / ((s - 1.0) * (s + 1.0)));
}

RecurrenceCoefficients orthonormal_recurrence(const JacobiParams& params, int n) {
  if (n < 1) throw DomainError("recurrence size must be >= 1");
  RecurrenceCoefficients rc;
  rc.diagonal.resize(static_cast<std::size_t>(n));
  rc.offdiagonal.resize(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n; ++j) rc.diagonal[static_cast<std::size_t>(j)] = recurrence_diagonal(params, j);
  for (int j = 1; j < n; ++j) {
    rc.offdiagonal[static_cast<std::size_t>(j - 1)] = recurrence_offdiagonal(params, j);
  }
  return rc;
}

double jacobi_eval(const JacobiParams& params, int n, double x) {
  check_degree(n);
  check_point(x);
  const double a = params.alpha();
  const double b = params.beta();
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
    const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
    const double next = (c2 * cur - c3 * prev) / c1;
    prev = cur;
    cur = next;
  }
  return cur;
}

double weight_mass(const JacobiParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  const double log_mass = (a + b + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                          std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0);
  return std::exp(log_mass);
}

double orthonormal_norm_const(const JacobiParams& params, int n) {
  check_degree(n);
  const double a = params.alpha();
  const double b = params.beta();
  const double log_w2 = log_leading_gamma(a, b, n) + std::lgamma(n + 1.0) -
                        (a + b + 1.0) * std::log(2.0) - std::lgamma(n + a + 1.0) -
                        std::lgamma(n + b + 1.0);
  return std::exp(0.5 * log_w2);
}

double orthonormal_eval(const JacobiParams& params, int n, double x) {
  check_degree(n);
  check_point(x);
  double prev = 1.0 / std::sqrt(weight_mass(params));
  if (n == 0) return prev;
  double b_cur = recurrence_offdiagonal(params, 1);
  double cur = (x - recurrence_diagonal(params, 0)) * prev / b_cur;
  for (int j = 1; j < n; ++j) {
    const double b_next = recurrence_offdiagonal(params, j + 1);
    const double next = ((x - recurrence_diagonal(params, j)) * cur - b_cur * prev) / b_next;
    prev = cur;
    cur = next;
    b_cur = b_next;
  }
  return cur;
}

void orthonormal_sweep(const JacobiParams& params, double x, std::span<double> out) {
  check_point(x);
  if (out.empty()) return;
  out[0] = 1.0 / std::sqrt(weight_mass(params));
  if (out.size() == 1) return;
  out[1] = (x - recurrence_diagonal(params, 0)) * out[0] / recurrence_offdiagonal(params, 1);
  double b_cur = recurrence_offdiagonal(params, 1);
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    const int jj = static_cast<int>(j);
    const double b_next = recurrence_offdiagonal(params, jj + 1);
    out[j + 1] = ((x - recurrence_diagonal(params, jj)) * out[j] - b_cur * out[j - 1]) / b_next;
    b_cur = b_next;
  }
}

double eigenvalue(const JacobiParams& params, int n) {
  check_degree(n);
  return n * (n + params.alpha() + params.beta() + 1.0);
}

double derivative_factor(const JacobiParams& params, int n, int k) {
  check_degree(n);
  if (k < 0) throw DomainError("derivative order must be >= 0");
  if (k > n) return 0.0;
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= eigenvalue(params.shifted(j), n - j);
  return r;
}

double orthonormal_derivative_eval(const JacobiParams& params, int n, int k, double x) {
  check_degree(n);
  check_point(x);
  if (k < 0) throw DomainError("derivative order must be >= 0");
  if (k > n) return 0.0;
  if (k == 0) return orthonormal_eval(params, n, x);
  return std::sqrt(derivative_factor(params, n, k)) * orthonormal_eval(params.shifted(k), n - k, x);
}

OrthonormalRecurrence::OrthonormalRecurrence(const JacobiParams& params, int max_degree)
    : params_(params), max_degree_(max_degree), p0_(1.0 / std::sqrt(weight_mass(params))) {
  if (max_degree < 0) throw DomainError("max_degree must be >= 0");
  const auto n = static_cast<std::size_t>(max_degree);
  diag_.resize(n);
  off_.resize(n);
  inv_off_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    diag_[j] = recurrence_diagonal(params, static_cast<int>(j));
    off_[j] = recurrence_offdiagonal(params, static_cast<int>(j) + 1);
    inv_off_[j] = 1.0 / off_[j];
  }
}

std::pair<double, double> OrthonormalRecurrence::value_pair(int n, double x) const {
  double prev = p0_;
  double cur = (x - diag_[0]) * prev * inv_off_[0];
  for (int j = 1; j < n; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double next = ((x - diag_[jj]) * cur - off_[jj - 1] * prev) * inv_off_[jj];
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

double OrthonormalRecurrence::value(int n, double x) const {
  if (n == 0) return p0_;
  return value_pair(n, x).second;
}

void OrthonormalRecurrence::sweep(double x, std::span<double> out) const {
  if (out.empty()) return;
  out[0] = p0_;
  if (out.size() == 1) return;
  out[1] = (x - diag_[0]) * p0_ * inv_off_[0];
  for (std::size_t j = 1; j + 1 < out.size(); ++j) {
    out[j + 1] = ((x - diag_[j]) * out[j] - off_[j - 1] * out[j - 1]) * inv_off_[j];
  }
}

}  // namespace jsobolev
