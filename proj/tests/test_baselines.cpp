#include <doctest.h>

#include <cmath>
#include <vector>

#include "ddop/baselines.hpp"
#include "ddop/diffop1d.hpp"
#include "ddop/errors.hpp"

using namespace ddop;

namespace {

std::vector<double> forward_samples(double (*f)(double), double x0, double h, int n) {
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = f(x0 + k * h);
  return v;
}

}  // namespace

TEST_CASE("forward differences") {
  const auto lin = forward_samples([](double x) { return x; }, 0.0, 0.5, 2);
  CHECK(forward_difference(lin, 0.5, 1) == 1.0);

  for (double h : {0.1, 0.5, 2.0}) {
    const auto sq = forward_samples([](double x) { return x * x; }, 0.3, h, 3);
    CHECK(forward_difference(sq, h, 2) == doctest::Approx(2.0).epsilon(1e-12));
  }
  const auto cube = forward_samples([](double x) { return x * x * x - x; }, -1.0, 0.25, 4);
  CHECK(forward_difference(cube, 0.25, 3) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(forward_difference(cube, 0.25, 0) == cube[0]);

  CHECK_THROWS_AS(forward_difference(lin, 0.5, 2), DomainError);
  CHECK_THROWS_AS(forward_difference(lin, 0.0, 1), DomainError);
}

TEST_CASE("forward difference loses to the operator on exp(2x)") {
  auto f = [](double x) { return std::exp(2.0 * x); };
  const double h = 0.125;
  std::vector<double> fwd(11);
  for (int k = 0; k < 11; ++k) fwd[k] = f(k * h);
  const double fd_err = std::abs(forward_difference(fwd, h, 3) - 8.0);
  const auto plan = make_plan(0.0, h, 11);
  const double op_err = std::abs(estimate_derivatives(plan, sample(plan, f)).values[3] - 8.0);
  CHECK(op_err < fd_err);
}

TEST_CASE("natural spline") {
  const auto affine = Signal::sampled([](double x) { return 2.0 - 0.5 * x; }, -3.0, 0.5, 13);
  const auto m = spline_fit(affine);
  CHECK(m.second_derivatives[0] == 0.0);
  CHECK(m.second_derivatives[12] == 0.0);
  for (double x = -3.0; x <= 3.0; x += 0.0625) {
    CHECK(spline_eval(m, x) == doctest::Approx(2.0 - 0.5 * x).epsilon(1e-12));
  }

  const auto cubic = Signal::sampled([](double x) { return x * x * x; }, -1.0, 0.25, 9);
  const auto mc = spline_fit(cubic);
  for (Eigen::Index i = 0; i < cubic.size(); ++i) {
    CHECK(std::abs(spline_eval(mc, cubic.abscissa(i)) - cubic.values[i]) <= 1e-10);
  }
  // Natural ends force a mismatch with x^3 (whose second derivative is +-6 there).
  double worst = 0.0;
  for (double x = -0.875; x < 0.875; x += 0.125 / 4) {
    worst = std::max(worst, std::abs(spline_eval(mc, x) - x * x * x));
  }
  CHECK(worst > 1e-4);

  // C2 continuity: second derivatives from either side of each knot agree.
  const double eps = 1e-4;
  for (Eigen::Index i = 1; i + 1 < cubic.size(); ++i) {
    const double x = cubic.abscissa(i);
    auto s = [&](double t) { return spline_eval(mc, t); };
    const double left = (s(x) - 2 * s(x - eps) + s(x - 2 * eps)) / (eps * eps);
    const double right = (s(x + 2 * eps) - 2 * s(x + eps) + s(x)) / (eps * eps);
    CHECK(std::abs(left - right) < 1e-2);
    CHECK(std::abs(left - mc.second_derivatives[i]) < 1e-2);
  }

  CHECK_THROWS_AS(spline_eval(mc, 1.01), DomainError);
  CHECK_THROWS_AS(spline_fit(Signal(0.0, 1.0, Eigen::VectorXd::Zero(2))), DomainError);
}

TEST_CASE("linear interpolation") {
  const Signal knots(0.0, 1.0, (Eigen::VectorXd(3) << 0.0, 2.0, -1.0).finished());
  CHECK(linear_eval(knots, 0.5) == 1.0);
  CHECK(linear_eval(knots, 1.0) == 2.0);
  CHECK(linear_eval(knots, 2.0) == -1.0);
  CHECK(linear_eval(knots, 1.5) == 0.5);
  CHECK_THROWS_AS(linear_eval(knots, -0.1), DomainError);
  CHECK_THROWS_AS(linear_eval(knots, 2.5), DomainError);
}
