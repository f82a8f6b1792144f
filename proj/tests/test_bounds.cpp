#include <doctest.h>

#include <cmath>

#include "ddop/bounds.hpp"
#include "ddop/errors.hpp"
#include "oracles.hpp"

using namespace ddop;

TEST_CASE("hand-evaluated bounds") {
  CHECK(coefficient_bound({1.0, 1.0, 0.1, 2}, 1) == doctest::Approx(0.01));
  CHECK(coefficient_bound({1.0, 1.0, 1.0, 0}, 0) == doctest::Approx(1.0));
  CHECK(derivative_bound({1.0, 1.0, 0.1, 2}, 2) == doctest::Approx(0.1));
  CHECK(representation_bound({1.0, 1.0, 1.0, 0}) == doctest::Approx(2.0));

  // i = N collapses to M K^{N+1} h.
  const BoundParams p{3.0, 2.5, 0.2, 6};
  CHECK(derivative_bound(p, 6) == doctest::Approx(3.0 * std::pow(2.5, 7) * 0.2).epsilon(1e-12));
}

TEST_CASE("log-space oracle agreement") {
  const double M = std::exp(std::log(2.0) * 12 + 5.0);
  const BoundParams p{M, 5.0, 0.5, 10};
  for (int i = 0; i <= 10; ++i) {
    CHECK(coefficient_bound(p, i) ==
          doctest::Approx(oracle::coefficient_bound(M, 5.0, 0.5, 10, i)).epsilon(1e-12));
    CHECK(derivative_bound(p, i) ==
          doctest::Approx(oracle::derivative_bound(M, 5.0, 0.5, 10, i)).epsilon(1e-12));
  }
}

TEST_CASE("derivative bound is coefficient bound times i!") {
  const BoundParams p{1.0, 17.0, 0.0625, 34};
  for (int i = 0; i <= 20; ++i) {
    CHECK(log_derivative_bound(p, i) ==
          doctest::Approx(log_coefficient_bound(p, i) + oracle::log_factorial(i)).epsilon(1e-12));
  }
  CHECK(std::isfinite(log_derivative_bound(p, 1)));
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(derivative_bound({1.0, 1.0, 0.1, 2}, 3), DomainError);
  CHECK_THROWS_AS(coefficient_bound({1.0, 1.0, 0.1, 2}, -1), DomainError);
  CHECK_THROWS_AS(derivative_bound({1.0, 0.0, 0.1, 2}, 1), DomainError);
  CHECK_THROWS_AS(representation_bound({-1.0, 1.0, 0.1, 2}), DomainError);
}

TEST_CASE("monotone in M and h") {
  const BoundParams base{1.0, 3.0, 0.1, 6};
  for (int i = 0; i <= 6; ++i) {
    BoundParams bigger_m = base, bigger_h = base;
    bigger_m.M = 2.0;
    bigger_h.h = 0.2;
    CHECK(derivative_bound(bigger_m, i) > derivative_bound(base, i));
    CHECK(derivative_bound(bigger_h, i) > derivative_bound(base, i));
  }
  BoundParams bigger_h = base;
  bigger_h.h = 0.2;
  CHECK(representation_bound(bigger_h) > representation_bound(base));
}

TEST_CASE("equidistant curves") {
  const auto params = equidistant_params(0.0625, 9);
  CHECK(params.N == 8);
  CHECK(params.K == 4.0);

  const auto c1 = bound_curve(0.0625, 1, 3, 35);
  CHECK(c1.front().n_points == 3);
  CHECK(c1.back().n_points == 35);
  const int m1 = curve_minimizer(c1);
  CHECK((m1 == 7 || m1 == 9));
  CHECK(c1.front().bound > bound_curve(0.0625, 1, 7, 7).front().bound);
  CHECK(c1.back().bound > bound_curve(0.0625, 1, 9, 9).front().bound);

  const auto c5 = bound_curve(0.0625, 5, 7, 35);
  for (std::size_t k = 1; k < c5.size(); ++k) CHECK(c5[k].bound > c5[k - 1].bound);

  const auto c3 = bound_curve(0.015625, 3, 3, 35);
  for (std::size_t k = 1; k < c3.size(); ++k) CHECK(c3[k].bound < c3[k - 1].bound);

  const int rep = curve_minimizer(bound_curve(0.0625, std::nullopt, 3, 35));
  CHECK(rep >= 7);
  CHECK(rep <= 13);
  const int rep_fine = curve_minimizer(bound_curve(0.03125, std::nullopt, 3, 35));
  CHECK(rep_fine >= 15);
  CHECK(rep_fine <= 19);

  // Counts whose N is below the order are skipped.
  const auto c7 = bound_curve(0.0625, 7, 3, 11);
  CHECK(c7.front().n_points == 9);
  for (const auto& pt : bound_curve(0.0625, std::nullopt, 3, 35)) {
    CHECK(std::isfinite(pt.bound));
    CHECK(pt.bound > 0.0);
  }
}
