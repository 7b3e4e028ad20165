#include "sno/function.hpp"

#include <cmath>

namespace sno {

AnalyticFunction AnalyticFunction::polynomial(ComplexVector coefficients, double radius) {
  if (coefficients.empty()) fail(ErrorCode::schema_violation, "polynomial needs coefficients");
  for (const auto& c : coefficients) require_same_backend(c, coefficients.front());
  AnalyticFunction f;
  f.coefficients_ = std::move(coefficients);
  f.radius_ = radius;
  return f;
}

AnalyticFunction AnalyticFunction::named(const std::string& name, double radius) {
  if (name == "exp")
    return oracle(name, [](std::complex<double> z, unsigned) { return std::exp(z); }, radius);
  if (name == "sin")
    return oracle(
        name,
        [](std::complex<double> z, unsigned q) {
          switch (q % 4) {
            case 0: return std::sin(z);
            case 1: return std::cos(z);
            case 2: return -std::sin(z);
            default: return -std::cos(z);
          }
        },
        radius);
  fail(ErrorCode::schema_violation, "unknown function oracle \"" + name + "\"");
}

AnalyticFunction AnalyticFunction::oracle(std::string name, Oracle eval, double radius,
                                          unsigned max_order) {
  AnalyticFunction f;
  f.name_ = std::move(name);
  f.oracle_ = std::move(eval);
  f.radius_ = radius;
  f.max_order_ = max_order;
  return f;
}

void AnalyticFunction::require_in_radius(const Scalar& z) const {
  if (std::isinf(radius_)) return;
  if (std::abs(z.to_complex()) >= radius_)
    fail(ErrorCode::outside_analyticity_radius,
         z.to_string() + " lies outside the radius of analyticity " + std::to_string(radius_));
}

Scalar AnalyticFunction::derivative(const Scalar& z, unsigned order) const {
  require_in_radius(z);
  if (oracle_) {
    if (z.is_exact()) fail(ErrorCode::backend_mismatch, "function oracles run in the float backend");
    if (order > max_order_)
      fail(ErrorCode::derivative_order_exceeded,
           name_ + " provides derivatives up to order " + std::to_string(max_order_));
    std::complex<double> v = oracle_(z.to_complex(), order);
    if (order == 0 && has_shift_) v -= shift_.to_complex();
    return Scalar::floating(v, z.epsilon());
  }
  const Backend backend = z.backend();
  Scalar acc = Scalar::zero(backend);
  // Horner on the order-th derivative: sum_k c_k k!/(k-order)! z^{k-order}.
  for (std::size_t k = coefficients_.size(); k-- > order;) {
    mpz_class falling = 1;
    for (std::size_t t = k; t > k - order; --t) falling *= static_cast<unsigned long>(t);
    Scalar c = coefficients_[k].to_backend(backend) * Scalar::from_rational(mpq_class(falling), backend);
    acc = acc * z + c;
  }
  return acc;
}

AnalyticFunction AnalyticFunction::derivative_function() const {
  if (oracle_) fail(ErrorCode::schema_violation, "derivative_function needs a polynomial");
  ComplexVector d;
  const Backend backend = coefficients_.front().backend();
  for (std::size_t k = 1; k < coefficients_.size(); ++k)
    d.push_back(coefficients_[k] * Scalar::from_int(static_cast<long>(k), backend));
  if (d.empty()) d.push_back(Scalar::zero(backend));
  return polynomial(std::move(d), radius_);
}

AnalyticFunction AnalyticFunction::shifted() const {
  AnalyticFunction f = *this;
  if (oracle_) {
    f.shift_ = Scalar::floating(oracle_({0.0, 0.0}, 0));
    f.has_shift_ = true;
  } else {
    f.coefficients_[0] = f.coefficients_[0].zero_like();
  }
  return f;
}

Matrix apply_polynomial(const AnalyticFunction& f, const Matrix& x) {
  if (!f.is_polynomial()) fail(ErrorCode::schema_violation, "apply_polynomial needs a polynomial");
  if (!x.is_square()) fail(ErrorCode::dimension_mismatch, "matrix function of a non-square matrix");
  const Backend backend = x.backend();
  const Matrix id = Matrix::identity(x.rows(), backend);
  const auto& c = f.coefficients();
  Matrix acc = c.back().to_backend(backend) * id;
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k].to_backend(backend) * id;
  return acc;
}

Matrix apply_function(const AnalyticFunction& f, const Matrix& x, const ComplexVector& eigenvalues) {
  if (f.is_polynomial()) return apply_polynomial(f, x);
  if (!x.is_square() || eigenvalues.size() != x.rows())
    fail(ErrorCode::dimension_mismatch, "one eigenvalue per dimension is needed");
  const Backend backend = x.backend();
  if (backend.is_exact()) fail(ErrorCode::backend_mismatch, "function oracles run in the float backend");

  // Group equal eigenvalues so that confluent divided differences line up.
  ComplexVector z;
  std::vector<bool> used(eigenvalues.size(), false);
  for (std::size_t a = 0; a < eigenvalues.size(); ++a) {
    if (used[a]) continue;
    for (std::size_t b = a; b < eigenvalues.size(); ++b) {
      if (!used[b] && eigenvalues[b] == eigenvalues[a]) {
        used[b] = true;
        z.push_back(eigenvalues[a]);
      }
    }
  }
  const std::size_t m = z.size();
  std::vector<std::vector<Scalar>> dd(m, std::vector<Scalar>(m, Scalar::zero(backend)));
  for (std::size_t i = 0; i < m; ++i) dd[i][0] = f(z[i]);
  double factorial = 1.0;
  for (std::size_t k = 1; k < m; ++k) {
    factorial *= static_cast<double>(k);
    for (std::size_t i = 0; i + k < m; ++i) {
      if (z[i + k] == z[i])
        dd[i][k] = f.derivative(z[i], static_cast<unsigned>(k)) /
                   Scalar::floating(factorial, 0.0, backend.epsilon);
      else
        dd[i][k] = (dd[i + 1][k - 1] - dd[i][k - 1]) / (z[i + k] - z[i]);
    }
  }
  const Matrix id = Matrix::identity(m, backend);
  Matrix acc = dd[0][m - 1] * id;
  for (std::size_t k = m - 1; k-- > 0;) acc = acc * (x - z[k] * id) + dd[0][k] * id;
  return acc;
}

Matrix apply_function(const AnalyticFunction& f, const Matrix& x) {
  if (f.is_polynomial()) return apply_polynomial(f, x);
  auto ev = accessible_eigenvalues(x);
  if (!ev) fail(ErrorCode::spectrum_unavailable, "eigenvalues of the argument are not accessible");
  return apply_function(f, x, *ev);
}

}  // namespace sno
