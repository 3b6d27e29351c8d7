#pragma once

#include <cstddef>
#include <vector>

namespace moems {

// Small dense row-major matrix. Sized for Ritz systems (N <= 64), not for
// general numerical work.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator*=(double s);

  // Leading k x k block.
  Matrix leading(std::size_t k) const;

  double max_asymmetry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator*(Matrix a, double s);

// Lower-triangular L with A = L L^T. Returns false if A is not positive
// definite.
bool cholesky(const Matrix& a, Matrix& lower);

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]
  int sweeps = 0;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
// tol times the full norm.
SymmetricEigen jacobi_eigen(Matrix a, double tol = 1e-12, int max_sweeps = 100);

// K q = lambda M q with M symmetric positive definite. Eigenvectors are
// returned M-orthonormal. Throws std::invalid_argument if M is not SPD.
SymmetricEigen generalized_eigen(const Matrix& k, const Matrix& m, double tol = 1e-12);

}  // namespace moems
