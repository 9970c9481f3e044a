#include <cmath>
#include <numbers>

#include "doctest.h"
#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"

using namespace jsobolev;

TEST_SUITE("quadrature") {

TEST_CASE("one-point and small rules") {
  const QuadratureRule r1 = gauss_jacobi_rule(JacobiParams(0, 0), 1);
  REQUIRE(r1.order() == 1);
  CHECK(r1.nodes[0] == doctest::Approx(0.0).scale(1.0));
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(gauss_jacobi_rule(JacobiParams(0, 0), 0), DomainError);

  const QuadratureRule r8 = gauss_jacobi_rule(JacobiParams(1, 0), 8);
  double total = 0.0;
  for (double w : r8.weights) total += w;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("moments") {
  const QuadratureRule rule = gauss_jacobi_rule(JacobiParams(0, 0), 16);
  CHECK(integrate(rule, [](double x) { return std::pow(x, 30); }) == doctest::Approx(2.0 / 31).epsilon(1e-12));
  CHECK(integrate(rule, [](double) { return 1.0; }) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("rule structure") {
  for (double a : {-0.9, 0.0, 2.5}) {
    for (double b : {-0.5, 1.0}) {
      const QuadratureRule rule = gauss_jacobi_rule(JacobiParams(a, b), 40);
      for (int i = 0; i < rule.order(); ++i) {
        const auto u = static_cast<std::size_t>(i);
        CHECK(rule.weights[u] > 0.0);
        CHECK(rule.nodes[u] > -1.0);
        CHECK(rule.nodes[u] < 1.0);
        if (i > 0) CHECK(rule.nodes[u] > rule.nodes[u - 1]);
        CHECK(std::abs(orthonormal_eval(rule.params, 40, rule.nodes[u])) < 1e-8 * 10.0);
      }
    }
  }
}

TEST_CASE("reflection maps (a,b) rules onto (b,a) rules") {
  const QuadratureRule ab = gauss_jacobi_rule(JacobiParams(1.5, -0.3), 25);
  const QuadratureRule ba = gauss_jacobi_rule(JacobiParams(-0.3, 1.5), 25);
  for (std::size_t i = 0; i < 25; ++i) {
    CHECK(ab.nodes[i] == doctest::Approx(-ba.nodes[24 - i]).epsilon(1e-12).scale(1.0));
    CHECK(ab.weights[i] == doctest::Approx(ba.weights[24 - i]).epsilon(1e-12));
  }
}

TEST_CASE("determinism and cache") {
  const QuadratureRule a = gauss_jacobi_rule(JacobiParams(0.3, 0.6), 33);
  const QuadratureRule b = gauss_jacobi_rule(JacobiParams(0.3, 0.6), 33);
  CHECK(a.nodes == b.nodes);
  CHECK(a.weights == b.weights);
  const auto c1 = cached_gauss_jacobi_rule(JacobiParams(0.3, 0.6), 33);
  const auto c2 = cached_gauss_jacobi_rule(JacobiParams(0.3, 0.6), 33);
  CHECK(c1.get() == c2.get());
  CHECK(c1->nodes == a.nodes);
}

TEST_CASE("integrate orthonormal products") {
  const JacobiParams jp(0.4, 2.0);
  const QuadratureRule rule = gauss_jacobi_rule(jp, 6);
  CHECK(integrate(rule, [&](double x) { return std::pow(orthonormal_eval(jp, 2, x), 2); }) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const JacobiParams leg(0, 0);
  const QuadratureRule lrule = gauss_jacobi_rule(leg, 4);
  CHECK(std::abs(integrate(lrule, [&](double x) { return orthonormal_eval(leg, 1, x) * orthonormal_eval(leg, 3, x); })) <
        1e-12);
  CHECK_THROWS_AS(integrate(lrule, [](double) { return std::nan(""); }), NumericalError);
}

TEST_CASE("lp_norm basics") {
  const JacobiParams leg(0, 0);
  CHECK(lp_norm([](double) { return 1.0; }, 3.0, leg, 16) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
  const JacobiParams jp(0.5, 1.5);
  CHECK(lp_norm([&](double x) { return orthonormal_eval(jp, 9, x); }, 2.0, jp, 64) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(lp_norm([](double) { return 1.0; }, 0.5, leg, 16), DomainError);
  CHECK(lp_norm([](double x) { return x; }, kInfinity, leg, 16) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("lp_norm self-consistency on a smooth function") {
  const JacobiParams jp(0.5, 0.0);
  auto f = [](double x) { return std::exp(x) * std::cos(3 * x); };
  const double coarse = lp_norm(f, 3.5, jp, 64);
  const double fine = lp_norm(f, 3.5, jp, 128);
  CHECK(coarse == doctest::Approx(fine).epsilon(1e-8));
}

TEST_CASE("lp_norm of p_200 at p=6 against a refined grid") {
  const JacobiParams leg(0, 0);
  auto f = [&](double x) { return orthonormal_eval(leg, 200, x); };
  const double base = lp_norm(f, 6.0, leg, 400);
  const double refined = lp_norm(f, 6.0, leg, 1600);
  CHECK(base == doctest::Approx(refined).epsilon(0.03));
}

TEST_CASE("jacobi_lp_norm") {
  const JacobiParams jp(0.3, -0.2);
  CHECK(jacobi_lp_norm(jp, 17, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
  const JacobiParams leg(0, 0);
  // ||p_1||_p with p_1 = sqrt(3/2) x: (2 (3/2)^{p/2} / (p+1))^{1/p}
  for (double p : {1.0, 1.5, 3.0, 7.0}) {
    const double expected = std::pow(2 * std::pow(1.5, p / 2) / (p + 1), 1 / p);
    CHECK(jacobi_lp_norm(leg, 1, p) == doctest::Approx(expected).epsilon(1e-12));
  }
  auto f = [&](double x) { return orthonormal_eval(leg, 60, x); };
  CHECK(jacobi_lp_norm(leg, 60, 3.3) == doctest::Approx(lp_norm(f, 3.3, leg, 2000)).epsilon(1e-6));
  CHECK(jacobi_lp_norm(leg, 60, kInfinity) == doctest::Approx(orthonormal_eval(leg, 60, 1.0)).epsilon(1e-12));
}

TEST_CASE("graded integration") {
  // int_0^1 t^{-1/2} dt = 2; int_0^1 t^{-1} dt diverges
  const GradedResult ok = integrate_graded([](double t) { return 1 / std::sqrt(t); }, 0.0, 1.0, {16, 30, true, false});
  CHECK(ok.finite);
  CHECK(ok.value == doctest::Approx(2.0).epsilon(1e-10));
  const GradedResult bad = integrate_graded([](double t) { return 1 / t; }, 0.0, 1.0, {16, 30, true, false});
  CHECK_FALSE(bad.finite);
  const GradedResult both =
      integrate_graded([](double t) { return std::pow(t * (std::numbers::pi - t), -0.3); }, 0.0, std::numbers::pi);
  CHECK(both.finite);
}

}  // TEST_SUITE
