#pragma once

// Closed-form error bounds for the 1D operator, evaluated in log space.
//
//   coefficient:     M C(N,i) K^{2N+1-i} h^{N+1-i} / N!
//   derivative:      M K^{2N+1-i} h^{N+1-i} / (N-i)!
//   representation:  M h^{N+1} (K^{N+1} (K+1)^N / N! + 1 / (N+1)!)
//
// M bounds |f^{(N+1)}| on the sampling window, the offsets are at least h
// apart and at most K*h from the center.

#include <optional>
#include <vector>

namespace ddop {

struct BoundParams {
  double M = 1.0;
  double K = 1.0;
  double h = 1.0;
  int N = 0;
};

double log_coefficient_bound(const BoundParams& p, int i);
double log_derivative_bound(const BoundParams& p, int i);
double log_representation_bound(const BoundParams& p);

double coefficient_bound(const BoundParams& p, int i);
double derivative_bound(const BoundParams& p, int i);
double representation_bound(const BoundParams& p);

/// Parameters of the symmetric equidistant plan with n_points samples:
/// N = n_points - 1, K = N / 2.
BoundParams equidistant_params(double h, int n_points, double M = 1.0);

struct BoundPoint {
  int n_points = 0;
  std::optional<int> order;  // empty for the representation bound
  double bound = 0.0;
};

/// Bound against sample count over the odd counts in [min_points, max_points]
/// with M = 1 and K = (n-1)/2. An empty `order` selects the representation
/// bound; otherwise counts with N < order are skipped.
std::vector<BoundPoint> bound_curve(double h, std::optional<int> order, int min_points,
                                    int max_points);

/// Sample count with the smallest bound (first one on ties).
int curve_minimizer(const std::vector<BoundPoint>& curve);

}  // namespace ddop
