#include "jsobolev/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include <nlohmann/json.hpp>

#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"

namespace jsobolev {

double s_factor(const SobolevParams& sp, int n) {
  if (n < 0) throw DomainError("degree must be >= 0");
  double s = 0.0;
  for (int k = 0; k <= sp.m(); ++k) s += derivative_factor(sp.jacobi(), n, k);
  return s;
}

double q_derivative_scale(const SobolevParams& sp, int n, int ell) {
  if (ell < 0) throw DomainError("derivative order must be >= 0");
  if (ell > n) return 0.0;
  return std::sqrt(derivative_factor(sp.jacobi(), n, ell) / s_factor(sp, n));
}

double q_eval(const SobolevParams& sp, int n, int ell, double x) {
  if (n < 0) throw DomainError("degree must be >= 0");
  if (ell < 0) throw DomainError("derivative order must be >= 0");
  if (ell > n) {
    if (std::isnan(x) || x < -1.0 || x > 1.0) throw DomainError("evaluation point outside [-1,1]");
    return 0.0;
  }
  return q_derivative_scale(sp, n, ell) * orthonormal_eval(sp.jacobi().shifted(ell), n - ell, x);
}

FunctionBundle q_bundle(const SobolevParams& sp, int n) {
  if (n < 0) throw DomainError("degree must be >= 0");
  FunctionBundle bundle;
  bundle.name = "q" + std::to_string(n);
  bundle.max_order = std::max(sp.m(), n);
  bundle.degree_proxy = n;
  bundle.polynomial = true;
  bundle.eval = [sp, n](int ell, double x) { return q_eval(sp, n, ell, x); };
  return bundle;
}

int default_resolution(int n, const FunctionBundle& f) {
  return std::max(64, 2 * (n + f.degree_proxy));
}

namespace {

void require_orders(const SobolevParams& sp, const FunctionBundle& f) {
  if (f.max_order < sp.m()) {
    throw DomainError("bundle '" + f.name + "' provides derivatives up to " +
                      std::to_string(f.max_order) + " but m = " + std::to_string(sp.m()));
  }
}

// b_j^{(k)} for j = k..n: sum_i w_i f^{(k)}(x_i) p_{j-k}^{(alpha+k,beta+k)}(x_i).
std::vector<double> shifted_jacobi_moments(const SobolevParams& sp, const FunctionBundle& f, int n,
                                           int k, int resolution) {
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  if (k > n) return b;
  const JacobiParams shifted = sp.jacobi().shifted(k);
  const auto rule = cached_gauss_jacobi_rule(shifted, resolution);
  const OrthonormalRecurrence rec(shifted, n - k);
  std::vector<double> values(static_cast<std::size_t>(n - k) + 1);
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    const double fx = f.eval(k, rule->nodes[i]);
    if (!std::isfinite(fx)) throw NumericalError("bundle '" + f.name + "' not finite at a node");
    const double wf = rule->weights[i] * fx;
    if (wf == 0.0) continue;
    rec.sweep(rule->nodes[i], values);
    for (int j = k; j <= n; ++j) b[static_cast<std::size_t>(j)] += wf * values[static_cast<std::size_t>(j - k)];
  }
  return b;
}

// scale[j] = sqrt(r_{j,ell} / s_{j,m}), j = 0..n.
std::vector<double> derivative_scales(const SobolevParams& sp, int n, int ell) {
  std::vector<double> scale(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = ell; j <= n; ++j) scale[static_cast<std::size_t>(j)] = q_derivative_scale(sp, j, ell);
  return scale;
}

}  // namespace

double sobolev_inner(const SobolevParams& sp, const FunctionBundle& f, const FunctionBundle& g,
                     int resolution) {
  require_orders(sp, f);
  require_orders(sp, g);
  if (resolution < 1) throw DomainError("resolution must be >= 1");
  double total = 0.0;
  for (int k = 0; k <= sp.m(); ++k) {
    const auto rule = cached_gauss_jacobi_rule(sp.jacobi().shifted(k), resolution);
    total += integrate(*rule, [&](double x) { return f.eval(k, x) * g.eval(k, x); });
  }
  return total;
}

double fourier_coefficient(const SobolevParams& sp, const FunctionBundle& f, int j, int resolution) {
  if (j < 0) throw DomainError("coefficient index must be >= 0");
  return sobolev_inner(sp, f, q_bundle(sp, j), resolution);
}

Expansion decomposed_partial_sum(const SobolevParams& sp, const FunctionBundle& f, int n, int k,
                                 int resolution) {
  require_orders(sp, f);
  if (k < 0 || k > sp.m()) {
    throw DomainError("decomposition index k must lie in [0, m] (got " + std::to_string(k) + ")");
  }
  if (n < k) throw DomainError("decomposed partial sum needs n >= k");
  if (resolution <= 0) resolution = default_resolution(n, f);
  std::vector<double> coeffs = shifted_jacobi_moments(sp, f, n, k, resolution);
  const auto scale = derivative_scales(sp, n, k);
  for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j] *= scale[j];
  return {sp, std::move(coeffs)};
}

Expansion partial_sum(const SobolevParams& sp, const FunctionBundle& f, int n, int resolution) {
  require_orders(sp, f);
  if (n < 0) throw DomainError("truncation degree must be >= 0");
  if (resolution <= 0) resolution = default_resolution(n, f);
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= std::min(sp.m(), n); ++k) {
    const auto b = shifted_jacobi_moments(sp, f, n, k, resolution);
    for (int j = k; j <= n; ++j) {
      coeffs[static_cast<std::size_t>(j)] += q_derivative_scale(sp, j, k) * b[static_cast<std::size_t>(j)];
    }
  }
  return {sp, std::move(coeffs)};
}

namespace {

struct ExpansionEvaluator {
  Expansion e;
  // Per derivative order ell: scaled coefficients c_j sqrt(r_{j,ell}/s_{j,m})
  // for j = ell..n, and the shifted recurrence.
  std::vector<std::vector<double>> scaled;
  std::vector<std::unique_ptr<OrthonormalRecurrence>> rec;

  explicit ExpansionEvaluator(Expansion ex) : e(std::move(ex)) {
    const int n = e.n();
    const int orders = std::max(e.params.m(), n) + 1;
    scaled.resize(static_cast<std::size_t>(orders));
    rec.resize(static_cast<std::size_t>(orders));
    for (int ell = 0; ell <= std::min(n, orders - 1); ++ell) {
      auto& s = scaled[static_cast<std::size_t>(ell)];
      s.resize(static_cast<std::size_t>(n - ell) + 1);
      for (int j = ell; j <= n; ++j) {
        s[static_cast<std::size_t>(j - ell)] =
            e.coeffs[static_cast<std::size_t>(j)] * q_derivative_scale(e.params, j, ell);
      }
      rec[static_cast<std::size_t>(ell)] =
          std::make_unique<OrthonormalRecurrence>(e.params.jacobi().shifted(ell), n - ell);
    }
  }

  double operator()(int ell, double x) const {
    const int n = e.n();
    if (n < 0 || ell > n) return 0.0;
    const auto& s = scaled[static_cast<std::size_t>(ell)];
    const auto& r = *rec[static_cast<std::size_t>(ell)];
    // Forward recurrence fused with the sum.
    thread_local std::vector<double> values;
    values.resize(s.size());
    r.sweep(x, values);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) acc += s[i] * values[i];
    return acc;
  }
};

}  // namespace

double evaluate_expansion(const Expansion& e, int ell, double x) {
  if (ell < 0) throw DomainError("derivative order must be >= 0");
  if (std::isnan(x) || x < -1.0 || x > 1.0) throw DomainError("evaluation point outside [-1,1]");
  double acc = 0.0;
  for (int j = ell; j <= e.n(); ++j) {
    const double c = e.coeffs[static_cast<std::size_t>(j)];
    if (c != 0.0) acc += c * q_eval(e.params, j, ell, x);
  }
  return acc;
}

FunctionBundle expansion_bundle(const Expansion& e) {
  auto evaluator = std::make_shared<const ExpansionEvaluator>(e);
  FunctionBundle bundle;
  bundle.name = "expansion(n=" + std::to_string(e.n()) + ")";
  bundle.max_order = std::max(e.params.m(), e.n());
  bundle.degree_proxy = std::max(e.n(), 0);
  bundle.polynomial = true;
  bundle.eval = [evaluator](int ell, double x) { return (*evaluator)(ell, x); };
  return bundle;
}

double sobolev_norm(const SobolevParams& sp, const FunctionBundle& f, double p, int resolution) {
  require_orders(sp, f);
  if (std::isnan(p) || p < 1.0 || std::isinf(p)) {
    throw DomainError("Sobolev norm exponent must satisfy 1 <= p < inf");
  }
  if (resolution <= 0) resolution = default_resolution(0, f);
  double total = 0.0;
  for (int k = 0; k <= sp.m(); ++k) {
    const double norm = lp_norm([&](double x) { return f.eval(k, x); }, p, sp.jacobi().shifted(k),
                                resolution);
    if (std::isinf(norm)) return kInfinity;
    total += std::pow(norm, p);
  }
  return std::pow(total, 1.0 / p);
}

std::string expansion_to_json(const Expansion& e) {
  nlohmann::json j;
  j["alpha"] = e.params.alpha();
  j["beta"] = e.params.beta();
  j["m"] = e.params.m();
  j["n"] = e.n();
  j["coeffs"] = e.coeffs;
  return j.dump();
}

Expansion expansion_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw DomainError(std::string("invalid expansion JSON: ") + err.what());
  }
  for (const char* key : {"alpha", "beta", "m", "n", "coeffs"}) {
    if (!j.contains(key)) throw DomainError(std::string("expansion JSON lacks key '") + key + "'");
  }
  Expansion e{SobolevParams(j["alpha"].get<double>(), j["beta"].get<double>(), j["m"].get<int>()),
              j["coeffs"].get<std::vector<double>>()};
  if (e.n() != j["n"].get<int>()) throw DomainError("expansion JSON: n does not match coeffs length");
  return e;
}

}  // namespace jsobolev
