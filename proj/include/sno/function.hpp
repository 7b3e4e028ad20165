#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "sno/matrix.hpp"
#include "sno/scalar.hpp"

namespace sno {

inline constexpr double kDerivativeEpsilon = 1e-10;

// An analytic function of one complex variable: either a polynomial with
// exact or float coefficients (ascending degree), or a named float oracle that
// evaluates f^{(q)}(z) for any order q.
class AnalyticFunction {
 public:
  using Oracle = std::function<std::complex<double>(std::complex<double> z, unsigned order)>;

  static AnalyticFunction polynomial(ComplexVector coefficients,
                                     double radius = std::numeric_limits<double>::infinity());
  // "exp" or "sin". Throws SchemaViolation for other names.
  static AnalyticFunction named(const std::string& name,
                                double radius = std::numeric_limits<double>::infinity());
  static AnalyticFunction oracle(std::string name, Oracle eval, double radius,
                                 unsigned max_order = std::numeric_limits<unsigned>::max());

  bool is_polynomial() const { return !oracle_; }
  const std::string& name() const { return name_; }
  const ComplexVector& coefficients() const { return coefficients_; }
  double radius() const { return radius_; }
  // Highest derivative order the oracle can supply.
  unsigned max_order() const { return max_order_; }

  // f^{(order)}(z). Polynomials stay in z's backend; oracles need a float z.
  Scalar derivative(const Scalar& z, unsigned order) const;
  Scalar operator()(const Scalar& z) const { return derivative(z, 0); }

  // Degree-wise derivative, for polynomials only.
  AnalyticFunction derivative_function() const;

  // f - f(0): the shifted function used by the f(0) = 0 convexity variant.
  AnalyticFunction shifted() const;

  // Throws OutsideAnalyticityRadius when |z| >= R.
  void require_in_radius(const Scalar& z) const;

 private:
  AnalyticFunction() = default;

  std::string name_ = "polynomial";
  ComplexVector coefficients_;
  Oracle oracle_;
  Scalar shift_;
  bool has_shift_ = false;
  double radius_ = std::numeric_limits<double>::infinity();
  unsigned max_order_ = std::numeric_limits<unsigned>::max();
};

// p(X) by Horner's rule. Polynomials only.
Matrix apply_polynomial(const AnalyticFunction& f, const Matrix& x);

// f(X) for a matrix whose eigenvalues (with algebraic multiplicity) are known.
// Polynomials are applied directly. Oracles go through the Hermite
// interpolating polynomial that matches f and its derivatives on the
// spectrum, which agrees with f(X) for any matrix with that spectrum.
Matrix apply_function(const AnalyticFunction& f, const Matrix& x, const ComplexVector& eigenvalues);

// f(X) with the eigenvalues read off a triangular or 2x2 matrix, or any
// matrix when f is a polynomial. SpectrumUnavailable otherwise.
Matrix apply_function(const AnalyticFunction& f, const Matrix& x);

}  // namespace sno
