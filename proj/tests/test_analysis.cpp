#include <cmath>
#include <vector>

#include "doctest.h"
#include "jsobolev/analysis.hpp"
#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"
#include "jsobolev/sobolev.hpp"

using namespace jsobolev;

TEST_SUITE("analysis") {

TEST_CASE("critical windows") {
  const CriticalWindow w = critical_window(0, 0, 1);
  CHECK(w.p_lower == doctest::Approx(8.0 / 5).epsilon(1e-15));
  CHECK(w.p_upper == doctest::Approx(8.0 / 3).epsilon(1e-15));
  const CriticalWindow v = critical_window(0.5, 0, 2);
  CHECK(v.p_lower == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(v.p_upper == doctest::Approx(7.0 / 3).epsilon(1e-15));
  CHECK_FALSE(w.contains(w.p_lower));
  CHECK_FALSE(w.contains(w.p_upper));
  CHECK(w.contains(2.0));
  CHECK_THROWS_AS(critical_window(0, 0, 0), DomainError);

  for (double a : {-0.9, 0.0, 0.7, 3.0}) {
    for (int m = 1; m <= 4; ++m) {
      const CriticalWindow c = critical_window(a, a, m);
      CHECK(1 / c.p_lower + 1 / c.p_upper == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(c.p_lower > 1.0);
      CHECK(c.p_upper > 2.0);
      const CriticalWindow next = critical_window(a, a, m + 1);
      CHECK(next.p_lower > c.p_lower);
      CHECK(next.p_upper < c.p_upper);
    }
  }
  const CriticalWindow ab = critical_window(0.3, 1.2, 2);
  const CriticalWindow ba = critical_window(1.2, 0.3, 2);
  CHECK(ab.p_lower == ba.p_lower);
  CHECK(ab.p_upper == ba.p_upper);
}

TEST_CASE("classical partial-sum window") {
  const CriticalWindow w = jacobi_partial_sum_window(0, 0);
  CHECK(w.p_lower == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(w.p_upper == doctest::Approx(4.0).epsilon(1e-15));
  const CriticalWindow edge = jacobi_partial_sum_window(-0.5, -0.5);
  CHECK(edge.p_lower == 1.0);
  CHECK(std::isinf(edge.p_upper));
  for (int m = 1; m <= 3; ++m) {
    const CriticalWindow a = jacobi_partial_sum_window(m, m);
    const CriticalWindow b = critical_window(0, 0, m);
    CHECK(a.p_lower == b.p_lower);
    CHECK(a.p_upper == b.p_upper);
  }
  CHECK_THROWS_AS(jacobi_partial_sum_window(-0.6, 0), DomainError);
}

TEST_CASE("growth fit") {
  std::vector<int> n = {10, 20, 40, 80, 160};
  std::vector<double> v;
  for (int d : n) v.push_back(3.0 * std::pow(d, 0.75));
  const GrowthFit fit = fit_growth(n, v);
  CHECK(fit.exponent == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(1.0));
  CHECK_THROWS_AS(fit_growth({10, 20, 40, 80}, {1, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(fit_growth({10, 11, 12, 13, 14}, {1, 1, 1, 1, 1}), DomainError);
}

TEST_CASE("Jacobi L^p growth regimes") {
  const std::vector<int> degrees = {16, 32, 64, 128, 256, 512};
  const JacobiLpGrowth two = jacobi_lp_growth(JacobiParams(0.5, 0.2), 2.0, degrees);
  CHECK(std::abs(two.fit.exponent) < 0.01);
  for (double v : two.fit.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(two.regime == NormRegime::kBounded);

  const JacobiLpGrowth six = jacobi_lp_growth(JacobiParams(0, 0), 6.0, degrees);
  CHECK(six.regime == NormRegime::kPower);
  CHECK(six.predicted_exponent == doctest::Approx(1.0 / 6).epsilon(1e-14));
  CHECK(six.fit.exponent == doctest::Approx(1.0 / 6).epsilon(0.03 * 6));
  CHECK(jacobi_lp_growth(JacobiParams(0, 0), 4.0, degrees).regime == NormRegime::kLogarithmic);
  // swapping parameters leaves the norms unchanged
  const JacobiLpGrowth swapped = jacobi_lp_growth(JacobiParams(0.2, 0.5), 3.0, degrees);
  const JacobiLpGrowth direct = jacobi_lp_growth(JacobiParams(0.5, 0.2), 3.0, degrees);
  CHECK(swapped.fit.values == direct.fit.values);
  CHECK_THROWS_AS(jacobi_lp_growth(JacobiParams(0, 0), 3.0, {64, 32, 128, 256, 1024}), DomainError);
}

TEST_CASE("norm products") {
  const SobolevParams sp(0.3, 0.1, 2);
  for (int n : {0, 3, 40}) CHECK(norm_product(sp, n, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
  const SobolevParams leg(0, 0, 1);
  CHECK(norm_product(leg, 37, 3.0) == doctest::Approx(norm_product(leg, 37, 1.5)).epsilon(1e-10));
  CHECK(norm_product(leg, 50, 2.2) == doctest::Approx(norm_product_generic(leg, 50, 2.2, 400)).epsilon(1e-6));
  CHECK(q_sobolev_norm(leg, 12, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(norm_product(leg, 5, 1.0), DomainError);
}

TEST_CASE("asymptotic ratios") {
  const SobolevParams sp(0, 0, 1);
  for (int j : {1, 5, 20}) {
    const double expected = (j + 1.0) * (j + 1.0) / (1.0 + eigenvalue(sp.jacobi(), j));
    CHECK(asym_scaled_ratio(sp, 0, 0, j) == doctest::Approx(expected).epsilon(1e-14));
  }
  const SobolevParams sp2(1, 0.5, 2);
  CHECK(std::abs(asym_scaled_ratio(sp2, 2, 2, 1000) - 1.0) < 1e-3);
  const AsymRatio r = asym_ratio_check(sp2, 1, 2, {100, 200, 400, 800, 1600});
  CHECK(std::isfinite(r.limit));
  CHECK(r.max_value < 10 * r.values.back());
  CHECK_THROWS_AS(asym_scaled_ratio(sp2, 3, 0, 10), DomainError);
}

TEST_CASE("convergence experiments") {
  const SobolevParams sp(0, 0, 1);
  const ConvergenceResult q7 = convergence_experiment(sp, q_bundle(sp, 7), 2.0, {2, 5, 7, 9, 12});
  CHECK(q7.errors[0] == doctest::Approx(1.0).epsilon(1e-8));
  for (std::size_t i = 2; i < q7.errors.size(); ++i) CHECK(q7.errors[i] < 1e-8);

  const ConvergenceResult smooth = convergence_experiment(sp, exp_bundle(), 2.2, {2, 4, 6, 8, 10, 12});
  CHECK(smooth.strictly_decreasing);
  CHECK(convergence_experiment(sp, exp_bundle(), 2.2, {32}).errors[0] < 1e-6);

  const ConvergenceResult rough = convergence_experiment(sp, one_minus_x_power_bundle(0.7), 2.0, {8, 16, 32, 64});
  CHECK(rough.strictly_decreasing);
  CHECK_THROWS_AS(convergence_experiment(sp, exp_bundle(), 2.0, {4, 2}), DomainError);
}

}  // TEST_SUITE
