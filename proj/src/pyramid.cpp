#include "ddop/pyramid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddop/errors.hpp"

namespace ddop {

Kernel parse_kernel(std::string_view name) {
  if (name == "binomial") return Kernel::kBinomial;
  if (name == "mean") return Kernel::kMean;
  throw DomainError("unknown kernel '" + std::string(name) + "' (expected binomial|mean)");
}

std::string_view kernel_name(Kernel kernel) {
  return kernel == Kernel::kMean ? "mean" : "binomial";
}

Eigen::VectorXd smooth(const Eigen::VectorXd& values, Kernel kernel) {
  const double side = kernel == Kernel::kMean ? 1.0 / 3.0 : 0.25;
  const double mid = kernel == Kernel::kMean ? 1.0 / 3.0 : 0.5;
  const Eigen::Index n = values.size();
  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double left = values[i == 0 ? 0 : i - 1];
    const double right = values[i + 1 == n ? n - 1 : i + 1];
    out[i] = side * left + mid * values[i] + side * right;
  }
  return out;
}

Eigen::VectorXd decimate(const Eigen::VectorXd& values) {
  Eigen::VectorXd out((values.size() + 1) / 2);
  for (Eigen::Index k = 0; k < out.size(); ++k) out[k] = values[2 * k];
  return out;
}

Eigen::VectorXd upsample_linear(const Eigen::VectorXd& coarse, Eigen::Index target_size) {
  if (target_size > 2 * coarse.size() || target_size < 2 * coarse.size() - 1) {
    throw DomainError("upsample_linear: target size incompatible with 2x upsampling");
  }
  Eigen::VectorXd out(target_size);
  for (Eigen::Index i = 0; i < target_size; ++i) {
    const Eigen::Index k = i / 2;
    if (i % 2 == 0) {
      out[i] = coarse[k];
    } else {
      out[i] = k + 1 < coarse.size() ? 0.5 * (coarse[k] + coarse[k + 1]) : coarse[k];
    }
  }
  return out;
}

PyramidLevels build_pyramid(const Signal& f, int depth, Kernel kernel) {
  if (depth < 1) throw DomainError("build_pyramid: depth must be >= 1");
  if (depth >= 31 || f.size() < (Eigen::Index{1} << depth)) {
    throw DomainError("build_pyramid: signal shorter than 2^depth samples");
  }
  PyramidLevels p;
  p.kernel = kernel;
  Eigen::VectorXd finer = f.values;
  double spacing = f.spacing;
  for (int i = 1; i < depth; ++i) {
    Eigen::VectorXd coarser = decimate(smooth(finer, kernel));
    Eigen::VectorXd diff = finer - upsample_linear(coarser, finer.size());
    p.levels.push_back({Signal(f.start, spacing, std::move(diff))});
    finer = std::move(coarser);
    spacing *= 2.0;
  }
  p.levels.push_back({Signal(f.start, spacing, std::move(finer))});
  return p;
}

Eigen::VectorXd reconstruct(const PyramidLevels& p) {
  if (p.levels.empty()) throw DomainError("reconstruct: empty pyramid");
  Eigen::VectorXd acc = p.levels.back().difference.values;
  for (int i = p.depth() - 2; i >= 0; --i) {
    const Eigen::VectorXd& d = p.levels[i].difference.values;
    acc = d + upsample_linear(acc, d.size());
  }
  return acc;
}

namespace {

Eigen::Index nearest_index(const Signal& s, double x) {
  // Ties go left.
  const double u = (x - s.start) / s.spacing;
  const auto idx = static_cast<Eigen::Index>(std::ceil(u - 0.5));
  return std::clamp<Eigen::Index>(idx, 0, s.size() - 1);
}

}  // namespace

TaylorCoefficients<double> estimate_coefficients_pyramid(const PyramidLevels& p, double center,
                                                         int n_points) {
  if (p.levels.empty()) throw DomainError("estimate_coefficients_pyramid: empty pyramid");
  TaylorCoefficients<double> sum{center, Eigen::VectorXd::Zero(n_points)};
  for (const PyramidLevel& level : p.levels) {
    const Signal& d = level.difference;
    if (d.size() < n_points) {
      throw DomainError("estimate_coefficients_pyramid: level has fewer than n_points samples");
    }
    const Eigen::Index first = window_start(d.size(), nearest_index(d, center), n_points);
    Eigen::VectorXd offsets(n_points);
    for (int r = 0; r < n_points; ++r) offsets[r] = d.abscissa(first + r) - center;
    const SamplePlan<double> plan(center, level.level_spacing(),
                                  Offsets<double>(std::move(offsets)));
    sum.coeffs += estimate_coefficients(plan, d.values.segment(first, n_points)).coeffs;
  }
  return sum;
}

Signal resample_pyramid(const Signal& f, int depth, int n_points, int factor, Kernel kernel) {
  if (n_points % 2 == 0) throw DomainError("resample_pyramid: n_points must be odd");
  const ResampleGrid grid = make_resample_grid(f, factor);
  const PyramidLevels p = build_pyramid(f, depth, kernel);

  Eigen::VectorXd out(grid.size());
  TaylorCoefficients<double> coeffs;
  Eigen::Index model_center = -1;
  for (Eigen::Index k = 0; k < grid.size(); ++k) {
    const Eigen::Index c = grid.nearest_center(k);
    if (c != model_center) {
      coeffs = estimate_coefficients_pyramid(p, f.abscissa(c), n_points);
      model_center = c;
    }
    out[k] = evaluate_offset(coeffs, grid.offset_in_spacings(k) * f.spacing);
  }
  return Signal(f.start, f.spacing / factor, std::move(out));
}

}  // namespace ddop
