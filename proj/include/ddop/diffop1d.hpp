#pragma once

// One-dimensional discrete differential operator: Taylor coefficients (and
// hence all derivatives up to order N) at a center from N+1 samples.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ddop/errors.hpp"
#include "ddop/vandermonde.hpp"

namespace ddop {

// Largest supported sample count (N = 20, the last exact factorial in 64 bits).
inline constexpr int kMaxPoints = 21;

/// n! for 0 <= n <= 20, exact.
constexpr std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial: argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

template <typename Scalar>
class SamplePlan {
 public:
  SamplePlan(Scalar center, Scalar spacing, Offsets<Scalar> offsets)
      : center_(center), spacing_(spacing), offsets_(std::move(offsets)) {
    if (!(spacing_ > Scalar(0))) throw DomainError("SamplePlan: spacing must be > 0");
    if (offsets_.size() < 2) throw DomainError("SamplePlan: need at least 2 samples");
    if (offsets_.size() > kMaxPoints) {
      throw DomainError("SamplePlan: at most 21 samples (truncation order 20)");
    }
  }

  Scalar center() const noexcept { return center_; }
  Scalar spacing() const noexcept { return spacing_; }
  const Offsets<Scalar>& offsets() const noexcept { return offsets_; }
  int n_points() const noexcept { return static_cast<int>(offsets_.size()); }
  int order() const noexcept { return n_points() - 1; }
  // K with max |h_r| = K * spacing.
  Scalar half_width_multiple() const { return offsets_.max_abs() / spacing_; }

  Scalar abscissa(Eigen::Index i) const { return center_ + offsets_[i]; }

 private:
  Scalar center_;
  Scalar spacing_;
  Offsets<Scalar> offsets_;
};

/// Equidistant plan symmetric about x0: offsets (i - (n-1)/2) * h. Even
/// counts land on half-integer multiples of h.
template <typename Scalar>
SamplePlan<Scalar> make_plan(Scalar x0, Scalar h, int n_points) {
  if (!(h > Scalar(0))) throw DomainError("make_plan: spacing must be > 0");
  if (n_points < 2) throw DomainError("make_plan: need at least 2 sample points");
  if (n_points > kMaxPoints) throw DomainError("make_plan: at most 21 sample points");
  VectorX<Scalar> offsets(n_points);
  for (int i = 0; i < n_points; ++i) {
    offsets[i] = Scalar(2 * i - (n_points - 1)) * h / Scalar(2);
  }
  return SamplePlan<Scalar>(x0, h, Offsets<Scalar>(std::move(offsets)));
}

/// Estimated a^e_0..a^e_N about `center`.
template <typename Scalar>
struct TaylorCoefficients {
  Scalar center{};
  VectorX<Scalar> coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Scalar derivative(int n) const {
    return static_cast<Scalar>(factorial(n)) * coeffs[n];
  }
};

template <typename Scalar>
struct DerivativeEstimates {
  VectorX<Scalar> values;  // values[n] = n! * a^e_n
  std::optional<VectorX<Scalar>> truth;
  std::optional<VectorX<Scalar>> abs_error;

  int order() const noexcept { return static_cast<int>(values.size()) - 1; }

  // Fills truth and abs_error from an exact-derivative oracle d(n).
  template <typename Oracle>
  void attach_truth(Oracle&& exact) {
    VectorX<Scalar> t(values.size());
    for (Eigen::Index n = 0; n < values.size(); ++n) t[n] = exact(static_cast<int>(n));
    abs_error = (values - t).cwiseAbs();
    truth = std::move(t);
  }
};

template <typename Scalar, typename Derived>
TaylorCoefficients<Scalar> estimate_coefficients(const SamplePlan<Scalar>& plan,
                                                 const Eigen::MatrixBase<Derived>& samples) {
  if (samples.size() != plan.n_points()) {
    throw DomainError("estimate_coefficients: sample count does not match the plan");
  }
  TaylorCoefficients<Scalar> out;
  out.center = plan.center();
  out.coeffs = inverse_explicit(plan.offsets()) * samples.template cast<Scalar>();
  return out;
}

template <typename Scalar>
TaylorCoefficients<Scalar> estimate_coefficients(const SamplePlan<Scalar>& plan,
                                                 const std::vector<Scalar>& samples) {
  return estimate_coefficients(
      plan, Eigen::Map<const VectorX<Scalar>>(samples.data(),
                                              static_cast<Eigen::Index>(samples.size())));
}

template <typename Scalar>
DerivativeEstimates<Scalar> to_derivatives(const TaylorCoefficients<Scalar>& c) {
  DerivativeEstimates<Scalar> out;
  out.values.resize(c.coeffs.size());
  for (Eigen::Index n = 0; n < c.coeffs.size(); ++n) {
    out.values[n] = c.derivative(static_cast<int>(n));
  }
  return out;
}

template <typename Scalar, typename Samples>
DerivativeEstimates<Scalar> estimate_derivatives(const SamplePlan<Scalar>& plan,
                                                 const Samples& samples) {
  return to_derivatives(estimate_coefficients(plan, samples));
}

/// Samples f at every abscissa of the plan.
template <typename Scalar, typename F>
VectorX<Scalar> sample(const SamplePlan<Scalar>& plan, F&& f) {
  VectorX<Scalar> v(plan.n_points());
  for (int i = 0; i < plan.n_points(); ++i) v[i] = f(plan.abscissa(i));
  return v;
}

}  // namespace ddop
