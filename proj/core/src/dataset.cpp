#include "natcd/dataset.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "natcd/numerics.hpp"

namespace natcd {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
}

Matrix::Matrix(int rows, int cols, std::vector<double> column_major_data)
    : rows_(rows), cols_(cols), data_(std::move(column_major_data)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("Matrix: data size does not match dimensions");
  }
}

Dataset::Dataset(Matrix x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  const int n = x_.rows();
  const int p = x_.cols();
  if (n < 1 || p < 1) throw std::invalid_argument("Dataset: requires n >= 1 and p >= 1");
  if (y_.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("Dataset: response length " + std::to_string(y_.size()) +
                                " does not match n = " + std::to_string(n));
  }
  if (!all_finite(x_.data()) || !all_finite(y_)) {
    throw std::invalid_argument("Dataset: non-finite entry in x or y");
  }
  for (int i = 0; i < n; ++i) {
    if (x_(i, 0) != 1.0) {
      throw std::invalid_argument("Dataset: column 0 must be the all-ones intercept");
    }
  }

  w_.resize(p);
  for (int j = 0; j < p; ++j) {
    ExactAccumulator acc;
    const auto xj = x_.col(j);
    for (int i = 0; i < n; ++i) acc.add(y_[i] * xj[i]);
    w_[j] = acc.total() / n;
  }
}

Dataset Dataset::with_intercept(const Matrix& predictors, std::vector<double> y) {
  const int n = static_cast<int>(y.size());
  if (predictors.rows() != 0 && predictors.rows() != n) {
    throw std::invalid_argument("Dataset: predictor rows do not match response length");
  }
  Matrix x(n, predictors.cols() + 1);
  for (int i = 0; i < n; ++i) x(i, 0) = 1.0;
  for (int j = 0; j < predictors.cols(); ++j) {
    const auto src = predictors.col(j);
    auto dst = x.col(j + 1);
    for (int i = 0; i < n; ++i) dst[i] = src[i];
  }
  return Dataset(std::move(x), std::move(y));
}

}  // namespace natcd
