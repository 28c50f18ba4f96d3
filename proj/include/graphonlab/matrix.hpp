#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace graphonlab {

/// Dense row-major matrix of doubles; the storage behind every block kernel.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  std::vector<std::vector<double>> to_rows() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// a * diag(weights) * b.
Matrix weighted_product(const Matrix& a, std::span<const double> weights, const Matrix& b);

/// m * v.
std::vector<double> multiply(const Matrix& m, std::span<const double> v);

Matrix transpose(const Matrix& m);

double max_abs_difference(const Matrix& a, const Matrix& b);

}  // namespace graphonlab
