#include "ddop/localrep.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ddop/errors.hpp"

namespace ddop {

Signal::Signal(double start, double spacing, Eigen::VectorXd values)
    : start(start), spacing(spacing), values(std::move(values)) {
  if (!(spacing > 0.0)) throw DomainError("Signal: spacing must be > 0");
  if (this->values.size() < 2) throw DomainError("Signal: need at least 2 samples");
}

Eigen::Index window_start(Eigen::Index size, Eigen::Index center_index, int n_points) {
  if (n_points > size) throw DomainError("fit_local: window longer than the signal");
  if (center_index < 0 || center_index >= size) {
    throw DomainError("fit_local: center index outside the signal");
  }
  const Eigen::Index first = center_index - (n_points - 1) / 2;
  return std::clamp<Eigen::Index>(first, 0, size - n_points);
}

LocalModel fit_local(const Signal& signal, Eigen::Index center_index, int n_points) {
  if (n_points < 2) throw DomainError("fit_local: need at least 2 points");
  const Eigen::Index first = window_start(signal.size(), center_index, n_points);
  const double h = signal.spacing;
  Eigen::VectorXd offsets(n_points);
  for (int r = 0; r < n_points; ++r) {
    offsets[r] = static_cast<double>(first + r - center_index) * h;
  }
  const SamplePlan<double> plan(signal.abscissa(center_index), h,
                                Offsets<double>(std::move(offsets)));
  return LocalModel{plan.center(),
                    estimate_coefficients(plan, signal.values.segment(first, n_points)), h};
}

double evaluate_offset(const TaylorCoefficients<double>& coeffs, double t) {
  double acc = 0.0;
  for (Eigen::Index n = coeffs.coeffs.size() - 1; n >= 0; --n) acc = acc * t + coeffs.coeffs[n];
  return acc;
}

Evaluation evaluate(const LocalModel& model, double x) {
  const double t = x - model.center;
  return {evaluate_offset(model.coeffs, t), std::abs(t) > model.valid_radius};
}

Eigen::Index ResampleGrid::nearest_center(Eigen::Index k) const {
  const Eigen::Index q = k / factor;
  const Eigen::Index r = k % factor;
  return 2 * r > factor ? q + 1 : q;
}

double ResampleGrid::offset_in_spacings(Eigen::Index k) const {
  return static_cast<double>(k - nearest_center(k) * factor) / factor;
}

double ResampleGrid::abscissa(Eigen::Index k) const {
  const Eigen::Index c = nearest_center(k);
  return start + static_cast<double>(c) * spacing + offset_in_spacings(k) * spacing;
}

ResampleGrid make_resample_grid(const Signal& signal, int factor) {
  if (factor < 2) throw DomainError("resample: factor must be >= 2");
  return ResampleGrid{signal.start, signal.spacing, signal.size(), factor};
}

Signal resample(const Signal& signal, int factor, int n_points) {
  if (n_points % 2 == 0) throw DomainError("resample: n_points must be odd");
  const ResampleGrid grid = make_resample_grid(signal, factor);
  if (n_points > signal.size()) throw DomainError("resample: window longer than the signal");

  Eigen::VectorXd out(grid.size());
  std::optional<LocalModel> model;
  Eigen::Index model_center = -1;
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const Eigen::Index c = grid.nearest_center(k);
    if (c != model_center) {
      model = fit_local(signal, c, n_points);
      model_center = c;
    }
    out[k] = evaluate_offset(model->coeffs, grid.offset_in_spacings(k) * signal.spacing);
  }
  return Signal(signal.start, signal.spacing / factor, std::move(out));
}

}  // namespace ddop
