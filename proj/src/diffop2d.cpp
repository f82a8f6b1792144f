#include "ddop/diffop2d.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

#include "ddop/diffop1d.hpp"
#include "ddop/errors.hpp"

namespace ddop {

std::optional<int> ZigZagBasis2D::position(ExponentPair e) const {
  for (int l = 0; l < m(); ++l) {
    if (terms[l] == e) return l;
  }
  return std::nullopt;
}

Eigen::RowVectorXd ZigZagBasis2D::evaluate(double h, double k) const {
  // Power ladders, no pow().
  std::vector<double> hp(grid_side, 1.0), kp(grid_side, 1.0);
  for (int e = 1; e < grid_side; ++e) {
    hp[e] = hp[e - 1] * h;
    kp[e] = kp[e - 1] * k;
  }
  Eigen::RowVectorXd row(m());
  for (int l = 0; l < m(); ++l) row[l] = hp[terms[l].p] * kp[terms[l].q];
  return row;
}

ZigZagBasis2D build_basis(int side) {
  if (side < 1) throw DomainError("build_basis: side must be >= 1");
  ZigZagBasis2D basis;
  basis.grid_side = side;
  for (int d = 0; d <= 2 * (side - 1); ++d) {
    for (int p = std::min(d, side - 1); p >= 0 && d - p < side; --p) {
      basis.terms.push_back({p, d - p});
    }
  }
  return basis;
}

SampleGrid2D make_grid(double x0, double y0, double h, int side) {
  if (!(h > 0.0)) throw DomainError("make_grid: spacing must be > 0");
  if (side < 1) throw DomainError("make_grid: side must be >= 1");
  SampleGrid2D grid{x0, y0, h, side, {}};
  grid.offsets.reserve(static_cast<std::size_t>(side) * side);
  for (int p = 0; p < side; ++p) {
    for (int q = 0; q < side; ++q) {
      grid.offsets.emplace_back((2 * p - (side - 1)) * h / 2.0, (2 * q - (side - 1)) * h / 2.0);
    }
  }
  return grid;
}

DesignMatrix2D build_design_matrix(const SampleGrid2D& grid, const ZigZagBasis2D& basis) {
  if (grid.side != basis.grid_side) {
    throw DomainError("build_design_matrix: grid side does not match the basis");
  }
  DesignMatrix2D out;
  out.matrix.resize(grid.m(), basis.m());
  for (int r = 0; r < grid.m(); ++r) {
    out.matrix.row(r) = basis.evaluate(grid.offsets[r].x(), grid.offsets[r].y());
  }
  out.singular_values = Eigen::JacobiSVD<Eigen::MatrixXd>(out.matrix).singularValues();
  const double sigma_max = out.singular_values.maxCoeff();
  if (out.singular_values.minCoeff() < kRankTolerance * sigma_max) {
    std::ostringstream msg;
    msg << "rank-deficient 2D design matrix; singular values:";
    for (double s : out.singular_values) msg << ' ' << s;
    throw SingularMatrixError(msg.str(), std::vector<double>(out.singular_values.begin(),
                                                             out.singular_values.end()));
  }
  out.lu.compute(out.matrix);
  return out;
}

std::shared_ptr<const DesignMatrix2D> cached_design_matrix(int side, double h) {
  static std::shared_mutex mutex;
  static std::map<std::pair<int, double>, std::shared_ptr<const DesignMatrix2D>> cache;

  const auto key = std::make_pair(side, h);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const DesignMatrix2D>(
      build_design_matrix(make_grid(0.0, 0.0, h, side), build_basis(side)));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

Coefficients2D estimate_coefficients_2d(const SampleGrid2D& grid, const ZigZagBasis2D& basis,
                                        const Eigen::VectorXd& samples) {
  if (samples.size() != grid.m()) {
    throw DomainError("estimate_coefficients_2d: expected side*side samples");
  }
  if (grid.side != basis.grid_side) {
    throw DomainError("estimate_coefficients_2d: grid side does not match the basis");
  }
  const auto design = cached_design_matrix(grid.side, grid.spacing);
  return Coefficients2D{grid.x0, grid.y0, design->lu.solve(samples)};
}

double extract_partial(const Coefficients2D& coeffs, const ZigZagBasis2D& basis, int i, int j) {
  if (j < 0 || j > i) throw DomainError("extract_partial: need 0 <= j <= i");
  const auto l = basis.position({j, i - j});
  if (!l) throw DomainError("extract_partial: term not present in the basis");
  return coeffs.g[*l] * static_cast<double>(factorial(j)) *
         static_cast<double>(factorial(i - j));
}

double remainder_bound_2d(double M, double rho, int N) {
  return std::exp(0.5 * (N + 1) * std::log(2.0) + std::log(M) + (N + 1) * std::log(rho) -
                  std::lgamma(N + 2.0));
}

}  // namespace ddop
