#pragma once

// Local truncated-Taylor representation of a uniformly sampled signal and
// sliding-window resampling built on it.

#include <Eigen/Dense>

#include <vector>

#include "ddop/diffop1d.hpp"

namespace ddop {

/// Uniform samples: value i sits at start + i * spacing.
struct Signal {
  double start = 0.0;
  double spacing = 1.0;
  Eigen::VectorXd values;

  Signal() = default;
  Signal(double start, double spacing, Eigen::VectorXd values);

  Eigen::Index size() const noexcept { return values.size(); }
  double abscissa(Eigen::Index i) const { return start + static_cast<double>(i) * spacing; }
  double last_abscissa() const { return abscissa(size() - 1); }

  template <typename F>
  static Signal sampled(F&& f, double start, double spacing, Eigen::Index count) {
    Eigen::VectorXd v(count);
    for (Eigen::Index i = 0; i < count; ++i) v[i] = f(start + static_cast<double>(i) * spacing);
    return Signal(start, spacing, std::move(v));
  }
};

struct LocalModel {
  double center = 0.0;
  TaylorCoefficients<double> coeffs;
  double valid_radius = 0.0;
};

struct Evaluation {
  double value = 0.0;
  bool stale = false;  // |x - center| exceeded valid_radius
};

/// First index of the n_points-sample window centered on `center_index`,
/// shifted so the window stays inside [0, size).
Eigen::Index window_start(Eigen::Index size, Eigen::Index center_index, int n_points);

/// Fits a model anchored at the abscissa of `center_index` from the window of
/// n_points consecutive samples around it.
LocalModel fit_local(const Signal& signal, Eigen::Index center_index, int n_points);

/// Horner evaluation of the model's polynomial in (x - center).
Evaluation evaluate(const LocalModel& model, double x);
double evaluate_offset(const TaylorCoefficients<double>& coeffs, double t);

/// Output grid shared by every resampler: spacing / factor, starting at the
/// input start and covering the full input span.
struct ResampleGrid {
  double start = 0.0;
  double spacing = 1.0;
  Eigen::Index input_size = 0;
  int factor = 1;

  Eigen::Index size() const noexcept { return (input_size - 1) * factor + 1; }
  // Input sample nearest output point k (ties go left).
  Eigen::Index nearest_center(Eigen::Index k) const;
  // Offset of output point k from its nearest center, in units of the input spacing.
  double offset_in_spacings(Eigen::Index k) const;
  // Exactly equal to the input abscissa whenever k is a multiple of factor.
  double abscissa(Eigen::Index k) const;
};

ResampleGrid make_resample_grid(const Signal& signal, int factor);

/// Upsamples by `factor`, evaluating each output point with the local model of
/// its nearest input sample. n_points must be odd.
Signal resample(const Signal& signal, int factor, int n_points);

}  // namespace ddop
