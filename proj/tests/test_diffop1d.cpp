#include <doctest.h>

#include <cmath>
#include <random>

#include "ddop/diffop1d.hpp"
#include "ddop/errors.hpp"
#include "oracles.hpp"

using namespace ddop;

TEST_CASE("make_plan offsets") {
  const auto p11 = make_plan(0.0, 0.5, 11);
  CHECK(p11.n_points() == 11);
  CHECK(p11.order() == 10);
  CHECK(p11.offsets()[0] == -2.5);
  CHECK(p11.offsets()[5] == 0.0);
  CHECK(p11.offsets()[10] == 2.5);
  CHECK(p11.half_width_multiple() == 5.0);

  const auto p3 = make_plan(0.0, 0.125, 3);
  CHECK(p3.offsets()[0] == -0.125);
  CHECK(p3.offsets()[1] == 0.0);
  CHECK(p3.offsets()[2] == 0.125);

  const auto p2 = make_plan(1.0, 1.0, 2);
  CHECK(p2.offsets()[0] == -0.5);
  CHECK(p2.offsets()[1] == 0.5);
  CHECK(p2.abscissa(1) == 1.5);

  CHECK_THROWS_AS(make_plan(0.0, 0.0, 5), DomainError);
  CHECK_THROWS_AS(make_plan(0.0, -1.0, 5), DomainError);
  CHECK_THROWS_AS(make_plan(0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(make_plan(0.0, 1.0, 22), DomainError);
}

TEST_CASE("factorials are exact") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(20) == 2432902008176640000ULL);
  CHECK_THROWS_AS(factorial(21), DomainError);
}

TEST_CASE("small exact cases") {
  const auto sq = estimate_coefficients(make_plan(0.0, 1.0, 3), std::vector<double>{1, 0, 1});
  CHECK(sq.coeffs[0] == doctest::Approx(0.0));
  CHECK(sq.coeffs[1] == doctest::Approx(0.0));
  CHECK(sq.coeffs[2] == doctest::Approx(1.0));

  const auto plan4 = make_plan(0.0, 1.0, 4);
  const auto cube = estimate_derivatives(plan4, sample(plan4, [](double x) { return x * x * x; }));
  CHECK(cube.values[3] == doctest::Approx(6.0).epsilon(1e-12));

  const auto plan = make_plan(0.3, 0.2, 7);
  const auto c = estimate_coefficients(plan, Eigen::VectorXd::Constant(7, 4.5));
  CHECK(c.coeffs[0] == doctest::Approx(4.5));
  for (int n = 1; n < 7; ++n) CHECK(std::abs(c.coeffs[n]) < 1e-9);

  CHECK_THROWS_AS(estimate_coefficients(plan, Eigen::VectorXd::Zero(6)), DomainError);
}

TEST_CASE("exp(2x) derivatives improve with smaller h") {
  auto f = [](double x) { return std::exp(2.0 * x); };
  const auto coarse_plan = make_plan(0.0, 0.0675, 11);
  const auto fine_plan = make_plan(0.0, 0.03375, 11);
  auto coarse = estimate_derivatives(coarse_plan, sample(coarse_plan, f));
  auto fine = estimate_derivatives(fine_plan, sample(fine_plan, f));
  auto truth = [](int n) { return std::ldexp(1.0, n); };
  coarse.attach_truth(truth);
  fine.attach_truth(truth);
  CHECK(fine.values[1] == doctest::Approx(2.0));
  CHECK((*fine.abs_error)[1] < (*coarse.abs_error)[1]);
  CHECK((*fine.truth)[4] == 16.0);

  // At h = 0.5 the first coefficient is close to 2 as well.
  const auto p = make_plan(0.0, 0.5, 11);
  CHECK(estimate_coefficients(p, sample(p, f)).coeffs[1] == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("sin(x)sin(10x) zeroth order") {
  const auto plan = make_plan(0.0, 0.25, 7);
  auto est = estimate_derivatives(plan, sample(plan, [](double x) {
                                    return std::sin(x) * std::sin(10.0 * x);
                                  }));
  CHECK(est.order() == 6);
  CHECK(std::abs(est.values[0]) < 0.05);
}

TEST_CASE("polynomial exactness, random") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-10.0, 10.0);
  std::uniform_real_distribution<double> spacing(0.05, 1.0);
  std::uniform_int_distribution<int> degree(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = degree(rng);
    std::vector<double> c(deg + 1);
    for (auto& v : c) v = coef(rng);
    const double h = spacing(rng);
    const auto plan = make_plan(0.0, h, 9);
    const auto est = estimate_coefficients(
        plan, sample(plan, [&](double x) { return oracle::poly_derivative(c, x, 0); }));
    double norm = 1.0;
    for (double v : c) norm = std::max(norm, std::abs(v));
    for (int n = 0; n <= 8; ++n) {
      const double truth = n <= deg ? c[n] : 0.0;
      CHECK(std::abs(est.coeffs[n] - truth) <= 1e-6 * norm);
    }
  }
}

TEST_CASE("linearity and shift covariance") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  const auto plan = make_plan(0.0, 0.25, 9);
  Eigen::VectorXd u(9), v(9);
  for (int i = 0; i < 9; ++i) u[i] = g(rng), v[i] = g(rng);
  const double a = 1.7, b = -0.3;
  const Eigen::VectorXd lhs = estimate_coefficients(plan, (a * u + b * v).eval()).coeffs;
  const Eigen::VectorXd rhs =
      a * estimate_coefficients(plan, u).coeffs + b * estimate_coefficients(plan, v).coeffs;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * rhs.cwiseAbs().maxCoeff());

  // Same offsets, different center: identical coefficients for g(t) = f(x0 + t).
  auto f = [](double x) { return std::cos(3.0 * x) + x * x; };
  const double x0 = 1.25;
  const SamplePlan<double> shifted(x0, 0.25, plan.offsets());
  Eigen::VectorXd fs(9), gs(9);
  for (int i = 0; i < 9; ++i) {
    fs[i] = f(x0 + plan.offsets()[i]);
    gs[i] = f(x0 + plan.offsets()[i]);
  }
  const auto cf = estimate_coefficients(shifted, fs);
  const auto cg = estimate_coefficients(plan, gs);
  CHECK(cf.center == x0);
  CHECK(cg.center == 0.0);
  CHECK(cf.coeffs == cg.coeffs);
}
