#pragma once

// Multi-resolution (difference pyramid) variant of the local operator.
//
// For depth m, with G_0 = F and G_i = decimate(smooth(G_{i-1})):
//   D_i = G_{i-1} - upsample(G_i)   for i = 1..m-1
//   D_m = G_{m-1}
// so that F = D_1 + up(D_2 + up(D_3 + ...)) holds exactly. Depth 1 stores F.

#include <string_view>
#include <vector>

#include "ddop/localrep.hpp"

namespace ddop {

enum class Kernel {
  kBinomial,  // (1/4, 1/2, 1/4)
  kMean,      // (1/3, 1/3, 1/3)
};

Kernel parse_kernel(std::string_view name);
std::string_view kernel_name(Kernel kernel);

struct PyramidLevel {
  Signal difference;  // spacing = base spacing * 2^(level index)
  double level_spacing() const noexcept { return difference.spacing; }
};

struct PyramidLevels {
  std::vector<PyramidLevel> levels;
  Kernel kernel = Kernel::kBinomial;

  int depth() const noexcept { return static_cast<int>(levels.size()); }
};

// 3-tap smoothing with edge replication.
Eigen::VectorXd smooth(const Eigen::VectorXd& values, Kernel kernel);
// Keeps indices 0, 2, 4, ...
Eigen::VectorXd decimate(const Eigen::VectorXd& values);
// Linear 2x upsampling to `target_size` samples; a missing right neighbour is
// replaced by the last coarse sample.
Eigen::VectorXd upsample_linear(const Eigen::VectorXd& coarse, Eigen::Index target_size);

PyramidLevels build_pyramid(const Signal& f, int depth, Kernel kernel = Kernel::kBinomial);

/// Sums the levels back to the base resolution.
Eigen::VectorXd reconstruct(const PyramidLevels& p);

/// Per level, solves on the n_points level samples around the one nearest
/// `center`, with offsets measured from `center` in original units, and sums
/// the coefficient vectors.
TaylorCoefficients<double> estimate_coefficients_pyramid(const PyramidLevels& p, double center,
                                                         int n_points);

Signal resample_pyramid(const Signal& f, int depth, int n_points, int factor,
                        Kernel kernel = Kernel::kBinomial);

}  // namespace ddop
