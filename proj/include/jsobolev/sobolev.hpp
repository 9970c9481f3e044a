#pragma once

#include <string>
#include <vector>

#include "jsobolev/bundle.hpp"
#include "jsobolev/params.hpp"

namespace jsobolev {

/// s_{n,m} = sum_{k=0}^m r_{n,k}; equals 1 at n = 0 and exceeds 1 otherwise.
double s_factor(const SobolevParams& sp, int n);

/// sqrt(r_{n,ell} / s_{n,m}), the scale between q_n^{(ell)} and
/// p_{n-ell}^{(alpha+ell, beta+ell)}. Zero when ell > n.
double q_derivative_scale(const SobolevParams& sp, int n, int ell);

/// ell-th derivative of the Sobolev-orthonormal polynomial q_n = p_n / sqrt(s_{n,m}).
double q_eval(const SobolevParams& sp, int n, int ell, double x);

/// q_n as a FunctionBundle with derivatives up to max(m, n).
FunctionBundle q_bundle(const SobolevParams& sp, int n);

/// Truncated Jacobi-Sobolev series sum_j coeffs[j] q_j.
struct Expansion {
  SobolevParams params;
  std::vector<double> coeffs;

  int n() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// Default Gauss-Jacobi node count for coefficient integrals up to degree n:
/// max(64, 2 (n + f.degree_proxy)).
int default_resolution(int n, const FunctionBundle& f);

/// <f, g> = sum_{k=0}^m int f^{(k)} g^{(k)} dmu_{alpha+k, beta+k}, each term by
/// a `resolution`-point Gauss-Jacobi rule.
double sobolev_inner(const SobolevParams& sp, const FunctionBundle& f, const FunctionBundle& g,
                     int resolution);

/// c_j(f) = <f, q_j>.
double fourier_coefficient(const SobolevParams& sp, const FunctionBundle& f, int j, int resolution);

/// Coefficients c_0..c_n of S_n f. resolution <= 0 selects default_resolution().
Expansion partial_sum(const SobolevParams& sp, const FunctionBundle& f, int n, int resolution = 0);

/// Coefficients of the k-th piece of S_n f: sqrt(r_{j,k}/s_{j,m}) b_j^{(k)}(f^{(k)})
/// for j >= k, where b_j^{(k)} pairs f^{(k)} with p_{j-k}^{(alpha+k, beta+k)}.
Expansion decomposed_partial_sum(const SobolevParams& sp, const FunctionBundle& f, int n, int k,
                                 int resolution = 0);

/// ell-th derivative of the expansion at x.
double evaluate_expansion(const Expansion& e, int ell, double x);

/// The expansion as a FunctionBundle (derivatives up to max(m, n)); keeps
/// precomputed scales, cheaper than repeated evaluate_expansion().
FunctionBundle expansion_bundle(const Expansion& e);

/// (sum_{k=0}^m ||f^{(k)}||_{L^p_{alpha+k,beta+k}}^p)^{1/p}, 1 <= p < inf.
/// `resolution` is the panel count handed to lp_norm(); <= 0 selects
/// default_resolution(0, f).
double sobolev_norm(const SobolevParams& sp, const FunctionBundle& f, double p, int resolution = 0);

/// {"alpha","beta","m","n","coeffs"} with round-trip double precision.
std::string expansion_to_json(const Expansion& e);
Expansion expansion_from_json(const std::string& text);

}  // namespace jsobolev
