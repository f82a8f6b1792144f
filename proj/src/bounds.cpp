#include "ddop/bounds.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "ddop/errors.hpp"

namespace ddop {
namespace {

void check(const BoundParams& p) {
  if (p.N < 0) throw DomainError("bounds: N must be >= 0");
  if (!(p.M >= 0.0)) throw DomainError("bounds: M must be >= 0");
  if (!(p.K > 0.0) || !(p.h > 0.0)) throw DomainError("bounds: K and h must be > 0");
}

void check_order(const BoundParams& p, int i) {
  check(p);
  if (i < 0 || i > p.N) throw DomainError("bounds: order must lie in [0, N]");
}

double log_m(double M) {
  return M == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(M);
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double log_add(double a, double b) {
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

}  // namespace

double log_coefficient_bound(const BoundParams& p, int i) {
  check_order(p, i);
  return log_m(p.M) + log_binomial(p.N, i) + (2.0 * p.N + 1 - i) * std::log(p.K) +
         (p.N + 1.0 - i) * std::log(p.h) - std::lgamma(p.N + 1.0);
}

double log_derivative_bound(const BoundParams& p, int i) {
  check_order(p, i);
  return log_m(p.M) + (2.0 * p.N + 1 - i) * std::log(p.K) + (p.N + 1.0 - i) * std::log(p.h) -
         std::lgamma(p.N - i + 1.0);
}

double log_representation_bound(const BoundParams& p) {
  check(p);
  const double lead = (p.N + 1.0) * std::log(p.K) + p.N * std::log(p.K + 1.0) -
                      std::lgamma(p.N + 1.0);
  const double tail = -std::lgamma(p.N + 2.0);
  return log_m(p.M) + (p.N + 1.0) * std::log(p.h) + log_add(lead, tail);
}

double coefficient_bound(const BoundParams& p, int i) {
  return std::exp(log_coefficient_bound(p, i));
}

double derivative_bound(const BoundParams& p, int i) {
  return std::exp(log_derivative_bound(p, i));
}

double representation_bound(const BoundParams& p) {
  return std::exp(log_representation_bound(p));
}

BoundParams equidistant_params(double h, int n_points, double M) {
  if (n_points < 2) throw DomainError("equidistant_params: need at least 2 points");
  const int N = n_points - 1;
  return BoundParams{M, N / 2.0, h, N};
}

std::vector<BoundPoint> bound_curve(double h, std::optional<int> order, int min_points,
                                    int max_points) {
  if (!(h > 0.0)) throw DomainError("bound_curve: h must be > 0");
  if (min_points < 2) min_points = 2;
  std::vector<BoundPoint> curve;
  for (int n = min_points; n <= max_points; ++n) {
    if (n % 2 == 0) continue;
    const BoundParams p = equidistant_params(h, n);
    if (order && *order > p.N) continue;
    const double lb = order ? log_derivative_bound(p, *order) : log_representation_bound(p);
    curve.push_back({n, order, std::exp(lb)});
  }
  return curve;
}

int curve_minimizer(const std::vector<BoundPoint>& curve) {
  if (curve.empty()) throw DomainError("curve_minimizer: empty curve");
  const BoundPoint* best = &curve.front();
  for (const auto& pt : curve) {
    if (pt.bound < best->bound) best = &pt;
  }
  return best->n_points;
}

}  // namespace ddop
