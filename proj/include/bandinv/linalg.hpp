#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace bandinv {

/// Row-major dense real matrix. Only meant for the small (N <= a few hundred)
/// matrices this library handles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  double frobenius() const;
  double max_abs() const;
  DenseMatrix transposed() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Singular values (descending) by one-sided Jacobi rotations.
std::vector<double> singular_values(const DenseMatrix& a);

/// Determinant by partial-pivot Gaussian elimination.
double determinant(DenseMatrix a);

}  // namespace bandinv
