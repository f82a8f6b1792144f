#pragma once

// Two-variable operator: samples on a side x side grid, a ZigZag-ordered
// tensor monomial basis h^p k^q (p, q < side) and a dense solve for the
// Taylor coefficients g.
//
// Coefficients follow the standard bivariate Taylor normalization
//   g(p, q) = d^{p+q} f / (dx^p dy^q) / (p! q!).

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <vector>

namespace ddop {

struct ExponentPair {
  int p = 0;  // power of the x offset h
  int q = 0;  // power of the y offset k

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Terms ordered along the anti-diagonals p + q = 0, 1, 2, ..., each diagonal
/// listed from the largest x power down:
///   side 3 -> 1, h, k, h^2, hk, k^2, h^2k, hk^2, h^2k^2.
struct ZigZagBasis2D {
  std::vector<ExponentPair> terms;
  int grid_side = 0;

  int m() const noexcept { return static_cast<int>(terms.size()); }
  std::optional<int> position(ExponentPair e) const;
  // Row of the design matrix: every term evaluated at (h, k).
  Eigen::RowVectorXd evaluate(double h, double k) const;
};

ZigZagBasis2D build_basis(int side);

struct SampleGrid2D {
  double x0 = 0.0;
  double y0 = 0.0;
  double spacing = 1.0;
  int side = 1;
  std::vector<Eigen::Vector2d> offsets;  // row-major: index p * side + q

  int m() const noexcept { return side * side; }
};

/// Offsets ((p - (side-1)/2) h, (q - (side-1)/2) h), symmetric for odd sides.
SampleGrid2D make_grid(double x0, double y0, double h, int side);

struct DesignMatrix2D {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd singular_values;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
};

// Rank threshold relative to the largest singular value.
inline constexpr double kRankTolerance = 1e-12;

/// Rows are the basis evaluated at each grid offset. Throws
/// SingularMatrixError (carrying the spectrum) when some singular value falls
/// below kRankTolerance * sigma_max.
DesignMatrix2D build_design_matrix(const SampleGrid2D& grid, const ZigZagBasis2D& basis);

/// Factorized design matrix for (side, h), built once and shared between
/// threads.
std::shared_ptr<const DesignMatrix2D> cached_design_matrix(int side, double h);

struct Coefficients2D {
  double x0 = 0.0;
  double y0 = 0.0;
  Eigen::VectorXd g;  // aligned to the basis
};

Coefficients2D estimate_coefficients_2d(const SampleGrid2D& grid, const ZigZagBasis2D& basis,
                                        const Eigen::VectorXd& samples);

/// d^i f / (dx^j dy^{i-j}) at the grid center.
double extract_partial(const Coefficients2D& coeffs, const ZigZagBasis2D& basis, int i, int j);

/// Lagrange remainder bound 2^{(N+1)/2} M rho^{N+1} / (N+1)! of the
/// total-degree-N bivariate Taylor polynomial at radius rho.
double remainder_bound_2d(double M, double rho, int N);

template <typename F>
Eigen::VectorXd sample_grid(const SampleGrid2D& grid, F&& f) {
  Eigen::VectorXd v(grid.m());
  for (int r = 0; r < grid.m(); ++r) {
    v[r] = f(grid.x0 + grid.offsets[r].x(), grid.y0 + grid.offsets[r].y());
  }
  return v;
}

}  // namespace ddop
