#include "graphonlab/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "graphonlab/error.hpp"

namespace graphonlab {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("matrix rows have unequal length");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
  }
  return m;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
  std::vector<std::vector<double>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  return out;
}

Matrix weighted_product(const Matrix& a, std::span<const double> weights, const Matrix& b) {
  if (a.cols() != weights.size() || b.rows() != weights.size()) {
    throw InputError("weighted_product: dimension mismatch");
  }
  Matrix out(a.rows(), b.cols());
#pragma omp parallel for schedule(static) if (a.rows() * b.cols() * weights.size() > 32768)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(a.rows()); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < weights.size(); ++k) sum += a(i, k) * weights[k] * b(k, j);
      out(i, j) = sum;
    }
  }
  return out;
}

std::vector<double> multiply(const Matrix& m, std::span<const double> v) {
  if (m.cols() != v.size()) throw InputError("multiply: dimension mismatch");
  std::vector<double> out(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("shape mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  }
  return worst;
}

}  // namespace graphonlab
