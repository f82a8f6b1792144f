#pragma once

// Vandermonde matrices over sample offsets, their closed-form determinant and
// the explicit inverse built from elementary symmetric polynomials.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <vector>

#include "ddop/errors.hpp"

namespace ddop {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Sample offsets h_1..h_{N+1} relative to an expansion center.
///
/// Duplicates are representable (min_gap() is then zero); they are rejected
/// only when an inverse is requested.
template <typename Scalar>
class Offsets {
 public:
  Offsets() = default;

  explicit Offsets(VectorX<Scalar> values) : values_(std::move(values)) {
    std::vector<Scalar> sorted(values_.data(), values_.data() + values_.size());
    std::sort(sorted.begin(), sorted.end());
    min_gap_ = sorted.size() < 2 ? Scalar(0) : std::numeric_limits<Scalar>::infinity();
    for (std::size_t r = 1; r < sorted.size(); ++r) {
      min_gap_ = std::min(min_gap_, sorted[r] - sorted[r - 1]);
    }
    max_abs_ = values_.size() == 0 ? Scalar(0) : values_.cwiseAbs().maxCoeff();
  }

  Offsets(std::initializer_list<Scalar> values)
      : Offsets(VectorX<Scalar>(Eigen::Map<const VectorX<Scalar>>(
            values.begin(), static_cast<Eigen::Index>(values.size())))) {}

  const VectorX<Scalar>& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.size(); }
  Scalar operator[](Eigen::Index i) const { return values_[i]; }

  // Smallest gap between any two offsets.
  Scalar min_gap() const noexcept { return min_gap_; }
  // Largest |h_r|; divided by the plan spacing this is the K of the error bounds.
  Scalar max_abs() const noexcept { return max_abs_; }

 private:
  VectorX<Scalar> values_;
  Scalar min_gap_ = Scalar(0);
  Scalar max_abs_ = Scalar(0);
};

/// e_0..e_{max_order} of the given values, via the product expansion of
/// prod_j (1 + y_j t). Costs O(k * max_order).
template <typename Derived>
VectorX<typename Derived::Scalar> elementary_symmetric_all(
    const Eigen::DenseBase<Derived>& values, Eigen::Index max_order) {
  using Scalar = typename Derived::Scalar;
  if (max_order < 0 || max_order > values.size()) {
    throw DomainError("elementary_symmetric: order must lie in [0, number of values]");
  }
  VectorX<Scalar> e = VectorX<Scalar>::Zero(max_order + 1);
  e[0] = Scalar(1);
  for (Eigen::Index j = 0; j < values.size(); ++j) {
    const Scalar y = values.derived().coeff(j);
    for (Eigen::Index m = std::min<Eigen::Index>(j + 1, max_order); m >= 1; --m) {
      e[m] += y * e[m - 1];
    }
  }
  return e;
}

/// e_m(values): sum of all products of m distinct entries. e_0 = 1.
template <typename Derived>
typename Derived::Scalar elementary_symmetric(const Eigen::DenseBase<Derived>& values,
                                              Eigen::Index m) {
  return elementary_symmetric_all(values, m)[m];
}

template <typename Scalar>
Scalar elementary_symmetric(const std::vector<Scalar>& values, Eigen::Index m) {
  return elementary_symmetric(
      Eigen::Map<const VectorX<Scalar>>(values.data(),
                                        static_cast<Eigen::Index>(values.size())),
      m);
}

/// The (N+1)x(N+1) matrix with rows (1, h_r, h_r^2, ..., h_r^N).
template <typename Scalar>
class VandermondeMatrix {
 public:
  explicit VandermondeMatrix(Offsets<Scalar> offsets) : offsets_(std::move(offsets)) {
    const Eigen::Index n = offsets_.size();
    rows_.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      Scalar power(1);
      for (Eigen::Index c = 0; c < n; ++c) {
        rows_(r, c) = power;
        power *= offsets_[r];
      }
    }
  }

  const MatrixX<Scalar>& matrix() const noexcept { return rows_; }
  const Offsets<Scalar>& offsets() const noexcept { return offsets_; }
  // Truncation order N (= size - 1).
  Eigen::Index order() const noexcept { return offsets_.size() - 1; }

 private:
  Offsets<Scalar> offsets_;
  MatrixX<Scalar> rows_;
};

namespace detail {

template <typename Scalar>
void throw_if_duplicate(const Offsets<Scalar>& offsets) {
  const Eigen::Index n = offsets.size();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      if (offsets[a] == offsets[b]) {
        std::ostringstream msg;
        msg << "singular Vandermonde matrix: offsets " << a << " and " << b
            << " coincide (value " << offsets[a] << ")";
        throw SingularMatrixError(msg.str());
      }
    }
  }
}

}  // namespace detail

/// Closed-form inverse:
///   inv(i, j) = (-1)^{N-i} e_{N-i}(h \ {h_j}) / prod_{m != j} (h_j - h_m).
/// Column j follows offset j, so permuting the offsets permutes the columns.
template <typename Scalar>
MatrixX<Scalar> inverse_explicit(const Offsets<Scalar>& offsets) {
  detail::throw_if_duplicate(offsets);
  const Eigen::Index n = offsets.size();
  const Eigen::Index order = n - 1;
  MatrixX<Scalar> inv(n, n);
  VectorX<Scalar> rest(order);
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar denom(1);
    for (Eigen::Index m = 0, k = 0; m < n; ++m) {
      if (m == j) continue;
      rest[k++] = offsets[m];
      denom *= offsets[j] - offsets[m];
    }
    const VectorX<Scalar> e = elementary_symmetric_all(rest, order);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index m = order - i;
      const Scalar sign = (m % 2 == 0) ? Scalar(1) : Scalar(-1);
      inv(i, j) = sign * e[m] / denom;
    }
  }
  return inv;
}

template <typename Scalar>
MatrixX<Scalar> inverse_explicit(const VandermondeMatrix<Scalar>& w) {
  return inverse_explicit(w.offsets());
}

/// prod_{r<s} (h_s - h_r). Zero for duplicate offsets.
template <typename Scalar>
Scalar determinant(const Offsets<Scalar>& offsets) {
  Scalar det(1);
  for (Eigen::Index r = 0; r < offsets.size(); ++r) {
    for (Eigen::Index s = r + 1; s < offsets.size(); ++s) {
      det *= offsets[s] - offsets[r];
    }
  }
  return det;
}

template <typename Scalar>
Scalar determinant(const VandermondeMatrix<Scalar>& w) {
  return determinant(w.offsets());
}

}  // namespace ddop
