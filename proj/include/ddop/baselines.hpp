#pragma once

// Comparison methods: forward differences, natural cubic spline and
// piecewise-linear interpolation.

#include <Eigen/Dense>

#include <span>

#include "ddop/localrep.hpp"

namespace ddop {

/// Delta^n f / h^n from samples f(x0 + k h), k = 0..n.
double forward_difference(std::span<const double> samples, double h, int order);

struct SplineModel {
  Signal knots;
  Eigen::VectorXd second_derivatives;  // zero at both ends
};

/// Natural cubic spline through uniformly spaced knots (at least 3).
SplineModel spline_fit(const Signal& knots);

/// Throws DomainError outside the knot span.
double spline_eval(const SplineModel& model, double x);

/// Piecewise-linear interpolation; throws DomainError outside the knot span.
double linear_eval(const Signal& knots, double x);

}  // namespace ddop
