#include "ddop/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "ddop/errors.hpp"

namespace ddop {
namespace {

// Query points built as start + k * spacing / factor can overshoot the last
// knot by a few ulps; accept those.
constexpr double kSpanSlack = 1e-9;

// Interval index i and local parameter t in [0, 1] with x = x_i + t * spacing.
std::pair<Eigen::Index, double> locate(const Signal& knots, double x) {
  const double u = (x - knots.start) / knots.spacing;
  const double last = static_cast<double>(knots.size() - 1);
  if (!(u >= -kSpanSlack && u <= last + kSpanSlack)) {
    throw DomainError("interpolation query outside the knot span");
  }
  const double clamped = std::clamp(u, 0.0, last);
  const auto i = std::min<Eigen::Index>(static_cast<Eigen::Index>(std::floor(clamped)),
                                        knots.size() - 2);
  return {i, clamped - static_cast<double>(i)};
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

}  // namespace

double forward_difference(std::span<const double> samples, double h, int order) {
  if (order < 0) throw DomainError("forward_difference: order must be >= 0");
  if (samples.size() < static_cast<std::size_t>(order) + 1) {
    throw DomainError("forward_difference: need order + 1 samples");
  }
  if (!(h > 0.0)) throw DomainError("forward_difference: spacing must be > 0");
  double acc = 0.0;
  for (int k = 0; k <= order; ++k) {
    const double sign = (order - k) % 2 == 0 ? 1.0 : -1.0;
    acc += sign * binomial(order, k) * samples[k];
  }
  return acc / std::pow(h, order);
}

SplineModel spline_fit(const Signal& knots) {
  const Eigen::Index n = knots.size();
  if (n < 3) throw DomainError("spline_fit: need at least 3 knots");
  const double h = knots.spacing;
  const Eigen::VectorXd& y = knots.values;

  // Interior equations on a uniform grid: M_{i-1} + 4 M_i + M_{i+1} = 6 Delta^2 y_i / h^2.
  // Thomas algorithm on the (n-2)x(n-2) system with M_0 = M_{n-1} = 0.
  const Eigen::Index m = n - 2;
  Eigen::VectorXd c_prime(m), d_prime(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double rhs = 6.0 * (y[i + 2] - 2.0 * y[i + 1] + y[i]) / (h * h);
    const double denom = i == 0 ? 4.0 : 4.0 - c_prime[i - 1];
    c_prime[i] = 1.0 / denom;
    d_prime[i] = (rhs - (i == 0 ? 0.0 : d_prime[i - 1])) / denom;
  }
  Eigen::VectorXd second = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = m - 1; i >= 0; --i) {
    second[i + 1] = d_prime[i] - (i + 1 < m ? c_prime[i] * second[i + 2] : 0.0);
  }
  return SplineModel{knots, std::move(second)};
}

double spline_eval(const SplineModel& model, double x) {
  const auto [i, t] = locate(model.knots, x);
  const double h = model.knots.spacing;
  const double a = 1.0 - t;
  const double y0 = model.knots.values[i], y1 = model.knots.values[i + 1];
  const double m0 = model.second_derivatives[i], m1 = model.second_derivatives[i + 1];
  return a * y0 + t * y1 + ((a * a * a - a) * m0 + (t * t * t - t) * m1) * h * h / 6.0;
}

double linear_eval(const Signal& knots, double x) {
  const auto [i, t] = locate(knots, x);
  if (t == 0.0) return knots.values[i];
  return (1.0 - t) * knots.values[i] + t * knots.values[i + 1];
}

}  // namespace ddop
