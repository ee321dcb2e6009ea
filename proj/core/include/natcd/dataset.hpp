#pragma once

#include <span>
#include <vector>

namespace natcd {

/// Dense column-major matrix. Coordinate descent sweeps one predictor column
/// at a time, so columns are kept contiguous.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<double> column_major_data);

  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }

  std::span<const double> col(int j) const {
    return {data_.data() + static_cast<std::size_t>(j) * rows_, static_cast<std::size_t>(rows_)};
  }
  std::span<double> col(int j) {
    return {data_.data() + static_cast<std::size_t>(j) * rows_, static_cast<std::size_t>(rows_)};
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<double>& data() const { return data_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

/// Immutable regression problem data: design matrix with the intercept in
/// column 0 (all entries exactly 1.0), response vector, and the moment vector
/// w_j = (1/n) sum_i y_i x_ij.
///
/// w is computed once at construction with exactly rounded summation, so it is
/// invariant under permutations of the sample order. Instances are safe to
/// share across concurrent fits.
class Dataset {
 public:
  /// x must already carry the all-ones intercept column at index 0.
  Dataset(Matrix x, std::vector<double> y);

  /// Prepends the intercept column to raw predictors.
  static Dataset with_intercept(const Matrix& predictors, std::vector<double> y);

  int n() const { return x_.rows(); }
  int p() const { return x_.cols(); }

  const Matrix& x() const { return x_; }
  std::span<const double> column(int j) const { return x_.col(j); }
  std::span<const double> y() const { return y_; }
  std::span<const double> w() const { return w_; }
  double w(int j) const { return w_[j]; }

 private:
  Matrix x_;
  std::vector<double> y_;
  std::vector<double> w_;
};

}  // namespace natcd
