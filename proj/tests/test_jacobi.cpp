#include <cmath>
#include <vector>

#include "doctest.h"
#include "jsobolev/jacobi.hpp"
#include "jsobolev/quadrature.hpp"

using namespace jsobolev;

TEST_SUITE("jacobi") {

TEST_CASE("parameter domain") {
  CHECK_THROWS_AS(JacobiParams(-1.0, 0.0), DomainError);
  CHECK_THROWS_AS(JacobiParams(0.0, -1.5), DomainError);
  CHECK_THROWS_AS(JacobiParams(std::nan(""), 0.0), DomainError);
  CHECK_THROWS_AS(SobolevParams(0.0, 0.0, 0), DomainError);
  CHECK_NOTHROW(JacobiParams(-0.99, 5.0));
}

TEST_CASE("jacobi_eval small degrees") {
  CHECK(jacobi_eval(JacobiParams(0.3, -0.4), 0, 0.3) == 1.0);
  CHECK(jacobi_eval(JacobiParams(2.0, 1.0), 1, 0.5) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(jacobi_eval(JacobiParams(0.0, 0.0), 2, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Legendre P_3(0.4) = (5 x^3 - 3x)/2
  CHECK(jacobi_eval(JacobiParams(0.0, 0.0), 3, 0.4) == doctest::Approx(0.5 * (5 * 0.064 - 1.2)).epsilon(1e-14));
}

TEST_CASE("n=1 closed form") {
  for (double a : {-0.5, 0.0, 1.5, 3.0}) {
    for (double b : {-0.7, 0.2, 2.0}) {
      for (double x : {-1.0, -0.3, 0.0, 0.8, 1.0}) {
        const double expected = ((a + b + 2) * x + (a - b)) / 2;
        CHECK(jacobi_eval(JacobiParams(a, b), 1, x) == doctest::Approx(expected).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("n=2 against the expanded Rodrigues form") {
  // P_2 = (a+1)(a+2)/2 + (a+2)(a+b+3)(x-1)/2 + (a+b+3)(a+b+4)(x-1)^2/8
  const double a = 0.7, b = -0.3;
  for (double x : {-0.9, 0.1, 0.6}) {
    const double expected = (a + 1) * (a + 2) / 2 + (a + 2) * (a + b + 3) * (x - 1) / 2 +
                            (a + b + 3) * (a + b + 4) * (x - 1) * (x - 1) / 8;
    CHECK(jacobi_eval(JacobiParams(a, b), 2, x) == doctest::Approx(expected).epsilon(1e-14));
  }
}

TEST_CASE("domain of x") {
  const JacobiParams jp(0.0, 0.0);
  CHECK_THROWS_AS(jacobi_eval(jp, 2, 1.5), DomainError);
  CHECK_THROWS_AS(orthonormal_eval(jp, 2, -1.0001), DomainError);
  CHECK_THROWS_AS(jacobi_eval(jp, 2, std::nan("")), DomainError);
}

TEST_CASE("reflection symmetry") {
  const JacobiParams ab(1.3, -0.4);
  for (int n = 0; n <= 50; ++n) {
    for (double x : {-0.95, -0.2, 0.45, 0.99}) {
      const double lhs = jacobi_eval(ab, n, -x);
      const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_eval(ab.swapped(), n, x);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("normalization constants") {
  CHECK(orthonormal_norm_const(JacobiParams(0, 0), 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(orthonormal_norm_const(JacobiParams(1, 1), 0) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));
  CHECK(std::isfinite(orthonormal_norm_const(JacobiParams(0.5, 2.0), 100000)));
  for (double a : {0.0, 0.5, -0.6}) {
    for (double b : {0.0, 1.5}) {
      const JacobiParams jp(a, b);
      for (int n = 1; n <= 100; ++n) {
        const double rhs = 2 * std::sqrt(n / (n + a + b + 1)) * orthonormal_norm_const(jp.shifted(1), n - 1);
        CHECK(orthonormal_norm_const(jp, n) == doctest::Approx(rhs).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("orthonormal values and orthogonality") {
  const JacobiParams leg(0, 0);
  CHECK(orthonormal_eval(leg, 0, 0.37) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(orthonormal_eval(leg, 1, 1.0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  const QuadratureRule rule = gauss_jacobi_rule(leg, 10);
  CHECK(std::abs(integrate(rule, [&](double x) { return orthonormal_eval(leg, 3, x) * orthonormal_eval(leg, 4, x); })) < 1e-12);
  CHECK(integrate(rule, [&](double x) { return std::pow(orthonormal_norm_const(leg, 5) * jacobi_eval(leg, 5, x), 2); }) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthonormal recurrence matches w_n P_n") {
  for (double a : {-0.5, 0.0, 2.5}) {
    for (double b : {-0.8, 1.0}) {
      const JacobiParams jp(a, b);
      for (int n : {0, 1, 2, 7, 40, 200}) {
        for (double x : {-0.99, -0.1, 0.3, 1.0}) {
          const double direct = orthonormal_norm_const(jp, n) * jacobi_eval(jp, n, x);
          CHECK(orthonormal_eval(jp, n, x) == doctest::Approx(direct).epsilon(1e-11).scale(1.0));
        }
      }
    }
  }
}

TEST_CASE("sweep and OrthonormalRecurrence agree with pointwise evaluation") {
  const JacobiParams jp(0.4, 1.2);
  std::vector<double> out(31);
  orthonormal_sweep(jp, 0.23, out);
  const OrthonormalRecurrence rec(jp, 30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(out[static_cast<std::size_t>(n)] == doctest::Approx(orthonormal_eval(jp, n, 0.23)).epsilon(1e-14));
    CHECK(rec.value(n, 0.23) == doctest::Approx(out[static_cast<std::size_t>(n)]).epsilon(1e-14));
  }
}

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(JacobiParams(1, 2), 3) == 21.0);
  CHECK(eigenvalue(JacobiParams(0.3, 0.9), 0) == 0.0);
  CHECK(eigenvalue(JacobiParams(0, 0), 1) == 2.0);
  const JacobiParams jp(0.5, -0.2);
  for (int n = 1; n < 50; ++n) CHECK(eigenvalue(jp, n) > eigenvalue(jp, n - 1));
}

TEST_CASE("derivative factors") {
  CHECK(derivative_factor(JacobiParams(0.3, 0.1), 7, 0) == 1.0);
  CHECK(derivative_factor(JacobiParams(0, 0), 3, 2) == 120.0);
  CHECK(derivative_factor(JacobiParams(1.5, 0.5), 2, 3) == 0.0);
  const JacobiParams jp(0.7, 0.2);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= 4; ++k) {
      double product = 0.0;
      if (k <= n) {
        product = 1.0;
        for (int j = 0; j < k; ++j) product *= eigenvalue(jp.shifted(j), n - j);
      }
      CHECK(derivative_factor(jp, n, k) == product);
    }
  }
}

TEST_CASE("derivatives") {
  const JacobiParams leg(0, 0);
  CHECK(orthonormal_derivative_eval(leg, 1, 1, 0.2) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
  CHECK(orthonormal_derivative_eval(leg, 4, 5, 0.2) == 0.0);
  const JacobiParams jp(0.5, 0.0);
  const double h = 1e-5, x = 0.3;
  const double fd =
      (orthonormal_eval(jp, 6, x + h) - 2 * orthonormal_eval(jp, 6, x) + orthonormal_eval(jp, 6, x - h)) / (h * h);
  CHECK(orthonormal_derivative_eval(jp, 6, 2, x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
}

TEST_CASE("eigenfunction equation") {
  for (double a : {0.0, 0.5, 2.0}) {
    for (double b : {-0.5, 1.0}) {
      const JacobiParams jp(a, b);
      for (int n = 0; n <= 30; n += 3) {
        const double lambda = eigenvalue(jp, n);
        for (double x : {-0.9, -0.4, 0.1, 0.75}) {
          const double p0 = orthonormal_eval(jp, n, x);
          const double p1 = orthonormal_derivative_eval(jp, n, 1, x);
          const double p2 = orthonormal_derivative_eval(jp, n, 2, x);
          const double residual = (1 - x * x) * p2 + ((b + 1) * (1 - x) - (a + 1) * (1 + x)) * p1 + lambda * p0;
          CHECK(std::abs(residual) <= 1e-8 * std::max(lambda, 1.0));
        }
      }
    }
  }
}

}  // TEST_SUITE
