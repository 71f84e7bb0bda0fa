#include "decay/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace decay {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw std::invalid_argument("matrix must be square");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  const std::size_t n = a.size();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) *= s;
  return c;
}

void multiply(const Matrix& a, std::span<const double> x, std::span<double> out) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    const auto row = a.row(i);
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
}

double inf_norm(const Matrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (double v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

NonnegativeMatrix::NonnegativeMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.size() == 0) throw std::invalid_argument("matrix must have at least one row");
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < m_.size(); ++j) {
      const double v = m_(i, j);
      if (!(v >= 0.0) || std::isinf(v)) {
        throw std::invalid_argument("negative entry at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
}

}  // namespace decay
