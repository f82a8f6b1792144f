#include <doctest.h>

#include <cmath>
#include <random>

#include "ddop/errors.hpp"
#include "ddop/pyramid.hpp"

using namespace ddop;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("kernels") {
  CHECK(parse_kernel("binomial") == Kernel::kBinomial);
  CHECK(parse_kernel("mean") == Kernel::kMean);
  CHECK(kernel_name(Kernel::kMean) == "mean");
  CHECK_THROWS_AS(parse_kernel("gauss"), DomainError);

  const Eigen::VectorXd s = smooth(vec({0, 0, 4, 0}), Kernel::kBinomial);
  CHECK((s - vec({0, 1, 2, 1})).cwiseAbs().maxCoeff() == 0.0);
  // Edge replication keeps constants exact at the ends.
  CHECK(smooth(vec({2, 2, 2}), Kernel::kMean).isApprox(vec({2, 2, 2})));
  CHECK(decimate(vec({1, 2, 3, 4, 5})) == vec({1, 3, 5}));
  CHECK(upsample_linear(vec({1, 3, 5}), 5) == vec({1, 2, 3, 4, 5}));
  CHECK(upsample_linear(vec({1, 3, 5}), 6) == vec({1, 2, 3, 4, 5, 5}));
  CHECK_THROWS_AS(upsample_linear(vec({1, 3, 5}), 7), DomainError);
}

TEST_CASE("constant signal") {
  const Signal f(0.0, 0.5, Eigen::VectorXd::Constant(16, 2.5));
  const auto p = build_pyramid(f, 2);
  REQUIRE(p.depth() == 2);
  CHECK(p.levels[0].difference.values.cwiseAbs().maxCoeff() < 1e-15);
  CHECK((p.levels[1].difference.values.array() - 2.5).abs().maxCoeff() < 1e-15);
  CHECK(p.levels[0].level_spacing() == 0.5);
  CHECK(p.levels[1].level_spacing() == 1.0);

  const auto c = estimate_coefficients_pyramid(p, 3.0, 5);
  CHECK(c.coeffs[0] == doctest::Approx(2.5));
  for (int n = 1; n < 5; ++n) CHECK(std::abs(c.coeffs[n]) < 1e-12);

  const auto r = resample_pyramid(f, 2, 5, 4);
  CHECK((r.values.array() - 2.5).abs().maxCoeff() < 1e-12);
}

TEST_CASE("first difference level, hand computed") {
  // Binomial smoothing of the impulse is (.25, .5, .25) around index 3; the
  // even samples (0, .25, .25, 0) upsample to (0, .125, .25, .25, .25, .125, 0, 0).
  const Signal impulse(0.0, 1.0, vec({0, 0, 0, 1, 0, 0, 0, 0}));
  const auto pi = build_pyramid(impulse, 2, Kernel::kBinomial);
  const Eigen::VectorXd d1 = vec({0, -0.125, -0.25, 0.75, -0.25, -0.125, 0, 0});
  CHECK((pi.levels[0].difference.values - d1).cwiseAbs().maxCoeff() < 1e-15);

  // Mean smoothing of 1, 3, ..., 11 gives (5/3, 3, 5, 7, 9, 31/3); keep
  // (5/3, 5, 9) and upsample to (5/3, 10/3, 5, 7, 9, 9).
  const Signal affine(0.0, 1.0, vec({1, 3, 5, 7, 9, 11}));
  const auto pa = build_pyramid(affine, 2, Kernel::kMean);
  const Eigen::VectorXd a1 = vec({-2.0 / 3.0, -1.0 / 3.0, 0, 0, 0, 2});
  CHECK((pa.levels[0].difference.values - a1).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((pa.levels[1].difference.values - vec({5.0 / 3.0, 5, 9})).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("depth one stores the signal") {
  const auto f = Signal::sampled([](double x) { return std::sin(x); }, -1.0, 0.1, 30);
  const auto p = build_pyramid(f, 1);
  REQUIRE(p.depth() == 1);
  CHECK(p.levels[0].difference.values == f.values);

  for (Eigen::Index c : {0, 7, 15, 29}) {
    const auto pyr = estimate_coefficients_pyramid(p, f.abscissa(c), 5);
    const auto van = fit_local(f, c, 5).coeffs;
    CHECK((pyr.coeffs - van.coeffs).cwiseAbs().maxCoeff() <=
          1e-12 * van.coeffs.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("reconstruction and affine telescoping") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  Eigen::VectorXd v(37);
  for (auto& x : v) x = g(rng);
  for (int depth = 1; depth <= 4; ++depth) {
    for (Kernel k : {Kernel::kBinomial, Kernel::kMean}) {
      const auto p = build_pyramid(Signal(0.0, 1.0, v), depth, k);
      CHECK((reconstruct(p) - v).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  const auto affine = Signal::sampled([](double x) { return 0.5 - 2.0 * x; }, 0.0, 0.25, 40);
  const auto p = build_pyramid(affine, 3, Kernel::kMean);
  const Eigen::VectorXd sum = reconstruct(p);
  CHECK((sum - affine.values).segment(4, 30).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("affine exactness in the interior") {
  auto line = [](double x) { return 1.5 + 0.75 * x; };
  const auto f = Signal::sampled(line, -4.0, 0.125, 64);
  const auto r = resample_pyramid(f, 2, 5, 4, Kernel::kMean);
  const auto grid = make_resample_grid(f, 4);
  // Stay clear of the clamped windows and the boundary samples of both levels.
  for (Eigen::Index k = 4 * 12; k < r.size() - 4 * 12; ++k) {
    CHECK(std::abs(r.values[k] - line(grid.abscissa(k))) < 1e-6);
  }
}

TEST_CASE("pipeline is linear") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> g;
  Eigen::VectorXd u(48), v(48);
  for (Eigen::Index i = 0; i < 48; ++i) u[i] = g(rng), v[i] = g(rng);
  const double a = 2.5, b = -0.75;
  const auto ru = resample_pyramid(Signal(0.0, 0.1, u), 2, 5, 4);
  const auto rv = resample_pyramid(Signal(0.0, 0.1, v), 2, 5, 4);
  const auto rw = resample_pyramid(Signal(0.0, 0.1, a * u + b * v), 2, 5, 4);
  const Eigen::VectorXd expect = a * ru.values + b * rv.values;
  CHECK((rw.values - expect).cwiseAbs().maxCoeff() <= 1e-10 * expect.cwiseAbs().maxCoeff());
}

TEST_CASE("domain errors") {
  const Signal f(0.0, 1.0, Eigen::VectorXd::Zero(6));
  CHECK_THROWS_AS(build_pyramid(f, 0), DomainError);
  CHECK_THROWS_AS(build_pyramid(f, 3), DomainError);
  // Level 2 has only 3 samples.
  CHECK_THROWS_AS(estimate_coefficients_pyramid(build_pyramid(f, 2), 2.0, 5), DomainError);
  CHECK_THROWS_AS(resample_pyramid(f, 1, 4, 2), DomainError);
}
