#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace decay {

/// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

void multiply(const Matrix& a, std::span<const double> x, std::span<double> out);

/// Maximum absolute row sum.
double inf_norm(const Matrix& a);

/// A square matrix whose entries are all finite and >= 0.
class NonnegativeMatrix {
 public:
  explicit NonnegativeMatrix(Matrix m);
  NonnegativeMatrix(std::initializer_list<std::initializer_list<double>> rows)
      : NonnegativeMatrix(Matrix(rows)) {}

  std::size_t size() const { return m_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  bool operator==(const NonnegativeMatrix&) const = default;

 private:
  Matrix m_;
};

}  // namespace decay
