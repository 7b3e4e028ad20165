#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sno/scalar.hpp"

namespace sno {

inline constexpr double kRankTolerance = 1e-8;
inline constexpr double kRankGapRatio = 10.0;

// Dense row-major matrix of scalars from one backend.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Backend& backend);
  static Matrix identity(std::size_t n, const Backend& backend);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, const Backend& backend);
  static Matrix diagonal(const ComplexVector& d, const Backend& backend);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Backend& backend() const { return backend_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix to_backend(const Backend& target) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix a);

  // Every entry equal under cmp_total (within epsilon for floats).
  bool approx_equal(const Matrix& other) const;

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Backend backend_;
  std::vector<Scalar> data_;
};

// Block-diagonal sum of square blocks.
Matrix direct_sum(const std::vector<Matrix>& blocks, const Backend& backend);

Matrix matrix_power(const Matrix& m, unsigned k);

// Exact rank by Gaussian elimination over complex
// rationals, or SVD rank for floats. Singular values at most
// tol * max(1, sigma_max) count as zero. When the kept and dropped singular
// values are closer than gap_ratio the rank is refused with RankAmbiguous.
std::size_t rank(const Matrix& m, double tol = kRankTolerance, double gap_ratio = kRankGapRatio);

// Inverse, or SingularTransform.
Matrix inverse(const Matrix& m);

// Frobenius norm of the difference, computed in double precision.
double residual(const Matrix& a, const Matrix& b);

// Largest singular value, in double precision.
double spectral_norm(const Matrix& m);

// Eigenvalues that can be read off without solving a characteristic
// polynomial: triangular matrices (diagonal entries) and 2x2 matrices
// (quadratic formula; the float backend only, unless the discriminant is a
// perfect rational square). Returns nullopt otherwise. Repeated values are
// listed with their algebraic multiplicity.
std::optional<ComplexVector> accessible_eigenvalues(const Matrix& m);

}  // namespace sno
