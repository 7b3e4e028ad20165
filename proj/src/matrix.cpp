#include "sno/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "sno/eigen_bridge.hpp"

namespace sno {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Backend& backend)
    : rows_(rows), cols_(cols), backend_(backend), data_(rows * cols, Scalar::zero(backend)) {}

Matrix Matrix::identity(std::size_t n, const Backend& backend) {
  Matrix m(n, n, backend);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(backend);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, const Backend& backend) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(r, c, backend);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::dimension_mismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j].is_exact() != backend.is_exact())
        fail(ErrorCode::backend_mismatch, "matrix entry from another backend");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::diagonal(const ComplexVector& d, const Backend& backend) {
  Matrix m(d.size(), d.size(), backend);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_, backend_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, backend_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::to_backend(const Backend& target) const {
  Matrix out(rows_, cols_, target);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].to_backend(target);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::dimension_mismatch, "matrix sum of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    fail(ErrorCode::dimension_mismatch, "matrix difference of different shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
  if (a.backend_.is_exact() != b.backend_.is_exact())
    fail(ErrorCode::backend_mismatch, "matrix product across backends");
  Matrix out(a.rows_, b.cols_, a.backend_.is_exact() ? a.backend_ : Backend::floating(std::max(a.backend_.epsilon, b.backend_.epsilon)));
  const bool sparse_skip = a.backend_.is_exact();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      // Jordan-type matrices are mostly zeros; skipping them keeps exact
      // arithmetic cheap.
      if (sparse_skip && aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (sparse_skip && bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix a) {
  for (auto& x : a.data_) x = s * x;
  return a;
}

bool Matrix::approx_equal(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!(data_[k] == other.data_[k])) return false;
  return true;
}

bool Matrix::is_upper_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_lower_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

bool Matrix::is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

Matrix direct_sum(const std::vector<Matrix>& blocks, const Backend& backend) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) fail(ErrorCode::dimension_mismatch, "direct sum of a non-square block");
    n += b.rows();
  }
  Matrix out(n, n, backend);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(offset + i, offset + j) = b(i, j);
    offset += b.rows();
  }
  return out;
}

Matrix matrix_power(const Matrix& m, unsigned k) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows(), m.backend());
  for (unsigned i = 0; i < k; ++i) result = result * m;
  return result;
}

namespace {

std::size_t exact_rank(Matrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t float_rank(const Matrix& m, double tol, double gap_ratio) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& s = svd.singularValues();
  const double threshold = tol * std::max(1.0, s(0));
  std::size_t r = 0;
  while (r < static_cast<std::size_t>(s.size()) && s(r) > threshold) ++r;
  if (r > 0 && r < static_cast<std::size_t>(s.size()) && s(r) > 0.0 &&
      s(r - 1) < gap_ratio * s(r))
    fail(ErrorCode::rank_ambiguous,
         "singular values " + std::to_string(s(r - 1)) + " and " + std::to_string(s(r)) +
             " straddle the rank threshold without a clear gap");
  return r;
}

}  // namespace

std::size_t rank(const Matrix& m, double tol, double gap_ratio) {
  if (m.backend().is_exact()) return exact_rank(m);
  return float_rank(m, tol, gap_ratio);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (!m.backend().is_exact()) {
    Eigen::MatrixXcd e = to_eigen(m);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
    lu.setThreshold(kRankTolerance);
    if (!lu.isInvertible()) fail(ErrorCode::singular_transform, "transform is singular");
    return from_eigen(lu.inverse(), m.backend().epsilon);
  }
  Matrix a = m;
  Matrix inv = Matrix::identity(n, m.backend());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorCode::singular_transform, "transform is singular");
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(c, j));
        std::swap(inv(pivot, j), inv(c, j));
      }
    }
    Scalar p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c).is_zero()) continue;
      Scalar factor = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(c, j);
        inv(i, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

double residual(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(ErrorCode::dimension_mismatch, "residual of different shapes");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      sum += std::norm(a(i, j).to_complex() - b(i, j).to_complex());
  return std::sqrt(sum);
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return svd.singularValues()(0);
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

// Square root of a + b*i with rational coordinates, if one exists.
std::optional<Scalar> gaussian_rational_sqrt(const Scalar& z) {
  const mpq_class& a = z.exact_re();
  const mpq_class& b = z.exact_im();
  auto r = rational_sqrt(a * a + b * b);
  if (!r) return std::nullopt;
  auto u = rational_sqrt((a + *r) / 2);
  auto v = rational_sqrt((*r - a) / 2);
  if (!u || !v) return std::nullopt;
  mpq_class im = sgn(b) < 0 ? mpq_class(-*v) : *v;
  return Scalar::exact(*u, im);
}

}  // namespace

std::optional<ComplexVector> accessible_eigenvalues(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  if (m.is_upper_triangular() || m.is_lower_triangular()) {
    ComplexVector d;
    for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
    return d;
  }
  if (m.rows() != 2) return std::nullopt;
  Scalar tr = m(0, 0) + m(1, 1);
  Scalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar disc = tr * tr - Scalar::from_int(4, m.backend()) * det;
  Scalar two = Scalar::from_int(2, m.backend());
  if (m.backend().is_exact()) {
    auto root = gaussian_rational_sqrt(disc);
    if (!root) return std::nullopt;
    return ComplexVector{(tr + *root) / two, (tr - *root) / two};
  }
  auto root = Scalar::floating(std::sqrt(disc.to_complex()), m.backend().epsilon);
  return ComplexVector{(tr + root) / two, (tr - root) / two};
}

}  // namespace sno
