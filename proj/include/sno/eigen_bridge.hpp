#pragma once

// Conversions between sno::Matrix and Eigen. Only needed by code that already
// depends on Eigen; the rest of the public headers stay Eigen-free.

#include <Eigen/Dense>

#include "sno/matrix.hpp"

namespace sno {

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& e, double eps = kDefaultEpsilon) {
  Matrix out(e.rows(), e.cols(), Backend::floating(eps));
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) out(i, j) = Scalar::floating(e(i, j), eps);
  return out;
}

}  // namespace sno
