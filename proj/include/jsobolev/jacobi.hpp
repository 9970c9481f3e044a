#pragma once

#include <span>
#include <utility>
#include <vector>

#include "jsobolev/params.hpp"

namespace jsobolev {

/// Classical Jacobi polynomial P_n^{(alpha,beta)}(x), Szego normalization
/// (P_n(1) = binom(n+alpha, n)), evaluated by the three-term recurrence.
double jacobi_eval(const JacobiParams& params, int n, double x);

/// Mass of the Jacobi measure: 2^{a+b+1} B(a+1, b+1).
double weight_mass(const JacobiParams& params);

/// w_n such that w_n P_n has unit norm in L^2(dmu_{alpha,beta}).
/// Computed from log-Gamma differences.
double orthonormal_norm_const(const JacobiParams& params, int n);

/// Orthonormal Jacobi polynomial p_n = w_n P_n.
double orthonormal_eval(const JacobiParams& params, int n, double x);

/// Writes p_0(x), ..., p_{out.size()-1}(x) into `out` using the orthonormal
/// recurrence. One sweep, O(out.size()).
void orthonormal_sweep(const JacobiParams& params, double x, std::span<double> out);

/// lambda_n = n (n + alpha + beta + 1).
double eigenvalue(const JacobiParams& params, int n);

/// r_{n,k} = prod_{j<k} lambda_{n-j}^{(alpha+j, beta+j)}; r_{n,0} = 1 and
/// r_{n,k} = 0 for k > n.
double derivative_factor(const JacobiParams& params, int n, int k);

/// k-th derivative of p_n, as sqrt(r_{n,k}) p_{n-k}^{(alpha+k, beta+k)}(x).
double orthonormal_derivative_eval(const JacobiParams& params, int n, int k, double x);

/// Coefficients of x p_j = b_{j+1} p_{j+1} + a_j p_j + b_j p_{j-1}.
struct RecurrenceCoefficients {
  std::vector<double> diagonal;     // a_0 .. a_{n-1}
  std::vector<double> offdiagonal;  // b_1 .. b_{n-1}
};

/// First n rows of the symmetric Jacobi matrix for (alpha, beta).
RecurrenceCoefficients orthonormal_recurrence(const JacobiParams& params, int n);

/// Off-diagonal coefficient b_j (j >= 1).
double recurrence_offdiagonal(const JacobiParams& params, int j);

/// Diagonal coefficient a_j (j >= 0).
double recurrence_diagonal(const JacobiParams& params, int j);

/// Precomputed orthonormal recurrence up to a fixed degree, for hot loops
/// that evaluate p_0..p_N at many points.
class OrthonormalRecurrence {
public:
  OrthonormalRecurrence(const JacobiParams& params, int max_degree);

  const JacobiParams& params() const noexcept { return params_; }
  int max_degree() const noexcept { return max_degree_; }

  /// p_n(x) for n <= max_degree(). No domain check on x.
  double value(int n, double x) const;

  /// (p_{n-1}(x), p_n(x)) for 1 <= n <= max_degree().
  std::pair<double, double> value_pair(int n, double x) const;

  /// p_0(x) .. p_{out.size()-1}(x); out.size() <= max_degree()+1.
  void sweep(double x, std::span<double> out) const;

private:
  JacobiParams params_;
  int max_degree_;
  double p0_;
  std::vector<double> diag_;      // a_0 .. a_{N-1}
  std::vector<double> inv_off_;   // 1 / b_1 .. 1 / b_N
  std::vector<double> off_;       // b_1 .. b_N
};

}  // namespace jsobolev
