#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "sno/error.hpp"

namespace sno {

inline constexpr double kDefaultEpsilon = 1e-9;

enum class BackendKind { exact, floating };

struct Backend {
  BackendKind kind = BackendKind::exact;
  double epsilon = 0.0;

  static Backend exact() { return {}; }
  static Backend floating(double eps = kDefaultEpsilon) {
    return {BackendKind::floating, eps};
  }
  bool is_exact() const { return kind == BackendKind::exact; }
  bool operator==(const Backend&) const = default;
};

// Parses "p/q", an integer, or a plain decimal such as "-0.25" into an exact
// rational. Throws Error(schema_violation) on anything else.
mpq_class parse_rational(const std::string& text);

// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const mpq_class& q);

// A complex number x + y*i under the lexicographic total order.
//
// The exact backend stores two GMP rationals. The float backend stores a
// std::complex<double> and compares coordinates within its epsilon. Mixing the
// two in one operation throws Error(backend_mismatch).
class Scalar {
 public:
  Scalar() : value_(Exact{}) {}

  static Scalar exact(mpq_class re, mpq_class im = 0);
  static Scalar exact(long re, long im = 0) { return exact(mpq_class(re), mpq_class(im)); }
  static Scalar floating(std::complex<double> z, double eps = kDefaultEpsilon);
  static Scalar floating(double re, double im = 0.0, double eps = kDefaultEpsilon) {
    return floating({re, im}, eps);
  }
  static Scalar from_int(long v, const Backend& backend);
  static Scalar from_rational(const mpq_class& v, const Backend& backend);
  static Scalar zero(const Backend& backend) { return from_int(0, backend); }
  static Scalar one(const Backend& backend) { return from_int(1, backend); }

  Backend backend() const;
  bool is_exact() const { return std::holds_alternative<Exact>(value_); }
  double epsilon() const { return epsilon_; }

  const mpq_class& exact_re() const;
  const mpq_class& exact_im() const;
  std::complex<double> to_complex() const;

  Scalar real() const;
  Scalar imag() const;
  Scalar conj() const;
  // x^2 + y^2, as a real scalar of the same backend.
  Scalar norm2() const;

  bool is_zero() const;
  bool is_real() const;

  Scalar zero_like() const { return zero(backend()); }
  Scalar one_like() const { return one(backend()); }
  // The same value moved to another backend. Exact to float rounds; float to
  // exact uses the exact binary value of the doubles.
  Scalar to_backend(const Backend& target) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Order-based equality: exact equality, or both coordinates within epsilon.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Exact {
    mpq_class re;
    mpq_class im;
  };

  std::variant<Exact, std::complex<double>> value_;
  double epsilon_ = 0.0;
};

using ComplexVector = std::vector<Scalar>;

enum class OrderOutcome { less, equal, greater };

std::string_view to_string(OrderOutcome o);

// Lexicographic order: real parts first, imaginary parts break ties.
OrderOutcome cmp_total(const Scalar& a, const Scalar& b);

// True when z1*z3 <= z2*z3, decided from the coordinates of z1, z2, z3 alone.
// Requires z1 <= z2.
bool mul_preserves_order(const Scalar& z1, const Scalar& z2, const Scalar& z3);

// True when z1/z3 <= z2/z3. Requires z1 <= z2 and z3 != 0.
bool div_preserves_order(const Scalar& z1, const Scalar& z2, const Scalar& z3);

// Compares 1/z1 with 1/z2 without dividing by a complex number.
OrderOutcome recip_cmp(const Scalar& z1, const Scalar& z2);

// True when z1*z2 >= 0. Requires z1 >= 0 and z2 >= 0.
bool product_nonneg(const Scalar& z1, const Scalar& z2);

void require_same_backend(const Scalar& a, const Scalar& b);

}  // namespace sno
