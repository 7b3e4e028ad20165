#include "sno/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace sno {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::backend_mismatch: return "BackendMismatch";
    case ErrorCode::order_precondition_failed: return "OrderPreconditionFailed";
    case ErrorCode::division_by_zero: return "DivisionByZero";
    case ErrorCode::dimension_mismatch: return "DimensionMismatch";
    case ErrorCode::index_error: return "IndexError";
    case ErrorCode::not_majorized: return "NotMajorized";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::not_dominated: return "NotDominated";
    case ErrorCode::empty_spec: return "EmptySpec";
    case ErrorCode::spectrum_mismatch: return "SpectrumMismatch";
    case ErrorCode::rank_ambiguous: return "RankAmbiguous";
    case ErrorCode::singular_transform: return "SingularTransform";
    case ErrorCode::derivative_order_exceeded: return "DerivativeOrderExceeded";
    case ErrorCode::outside_analyticity_radius: return "OutsideAnalyticityRadius";
    case ErrorCode::kappa_not_found: return "KappaNotFound";
    case ErrorCode::incomparable_nilpotent: return "IncomparableNilpotent";
    case ErrorCode::gradient_unavailable: return "GradientUnavailable";
    case ErrorCode::not_weakly_majorized: return "NotWeaklyMajorized";
    case ErrorCode::not_sn_ordered: return "NotSNOrdered";
    case ErrorCode::contraction_violated: return "ContractionViolated";
    case ErrorCode::not_a_projection: return "NotAProjection";
    case ErrorCode::spectrum_unavailable: return "SpectrumUnavailable";
    case ErrorCode::schema_violation: return "SchemaViolation";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::rank_ambiguous:
    case ErrorCode::spectrum_unavailable:
    case ErrorCode::gradient_unavailable:
    case ErrorCode::derivative_order_exceeded:
      return false;
    default:
      return true;
  }
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_rational(const std::string& text) {
  fail(ErrorCode::schema_violation, "not a rational number: \"" + text + "\"");
}

}  // namespace

mpq_class parse_rational(const std::string& text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::division_by_zero, "zero denominator in \"" + text + "\"");
    value = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      bad_rational(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = mpq_class(digits, scale);
  } else {
    if (!all_digits(s)) bad_rational(text);
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

std::string rational_to_string(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Scalar Scalar::exact(mpq_class re, mpq_class im) {
  re.canonicalize();
  im.canonicalize();
  Scalar s;
  s.value_ = Exact{std::move(re), std::move(im)};
  return s;
}

Scalar Scalar::floating(std::complex<double> z, double eps) {
  Scalar s;
  s.value_ = z;
  s.epsilon_ = eps;
  return s;
}

Scalar Scalar::from_int(long v, const Backend& backend) {
  return backend.is_exact() ? exact(v) : floating(static_cast<double>(v), 0.0, backend.epsilon);
}

Scalar Scalar::from_rational(const mpq_class& v, const Backend& backend) {
  return backend.is_exact() ? exact(v) : floating(v.get_d(), 0.0, backend.epsilon);
}

Backend Scalar::backend() const {
  return is_exact() ? Backend::exact() : Backend::floating(epsilon_);
}

const mpq_class& Scalar::exact_re() const {
  if (!is_exact()) fail(ErrorCode::backend_mismatch, "exact coordinate of a float scalar");
  return std::get<Exact>(value_).re;
}

const mpq_class& Scalar::exact_im() const {
  if (!is_exact()) fail(ErrorCode::backend_mismatch, "exact coordinate of a float scalar");
  return std::get<Exact>(value_).im;
}

std::complex<double> Scalar::to_complex() const {
  if (auto* e = std::get_if<Exact>(&value_)) return {e->re.get_d(), e->im.get_d()};
  return std::get<std::complex<double>>(value_);
}

Scalar Scalar::real() const {
  if (auto* e = std::get_if<Exact>(&value_)) return exact(e->re);
  return floating(std::get<std::complex<double>>(value_).real(), 0.0, epsilon_);
}

Scalar Scalar::imag() const {
  if (auto* e = std::get_if<Exact>(&value_)) return exact(e->im);
  return floating(std::get<std::complex<double>>(value_).imag(), 0.0, epsilon_);
}

Scalar Scalar::conj() const {
  if (auto* e = std::get_if<Exact>(&value_)) return exact(e->re, -e->im);
  return floating(std::conj(std::get<std::complex<double>>(value_)), epsilon_);
}

Scalar Scalar::norm2() const {
  if (auto* e = std::get_if<Exact>(&value_)) return exact(e->re * e->re + e->im * e->im);
  return floating(std::norm(std::get<std::complex<double>>(value_)), 0.0, epsilon_);
}

bool Scalar::is_zero() const {
  if (auto* e = std::get_if<Exact>(&value_)) return sgn(e->re) == 0 && sgn(e->im) == 0;
  auto z = std::get<std::complex<double>>(value_);
  return std::abs(z.real()) <= epsilon_ && std::abs(z.imag()) <= epsilon_;
}

bool Scalar::is_real() const {
  if (auto* e = std::get_if<Exact>(&value_)) return sgn(e->im) == 0;
  return std::abs(std::get<std::complex<double>>(value_).imag()) <= epsilon_;
}

Scalar Scalar::to_backend(const Backend& target) const {
  if (target.is_exact()) {
    if (is_exact()) return *this;
    auto z = to_complex();
    return exact(mpq_class(z.real()), mpq_class(z.imag()));
  }
  return floating(to_complex(), target.epsilon);
}

void require_same_backend(const Scalar& a, const Scalar& b) {
  if (a.is_exact() != b.is_exact())
    fail(ErrorCode::backend_mismatch, "exact and float scalars mixed in one operation");
}

Scalar Scalar::operator-() const {
  if (auto* e = std::get_if<Exact>(&value_)) return exact(-e->re, -e->im);
  return floating(-std::get<std::complex<double>>(value_), epsilon_);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* e = std::get_if<Exact>(&value_)) {
    const auto& r = std::get<Exact>(rhs.value_);
    e->re += r.re;
    e->im += r.im;
  } else {
    std::get<std::complex<double>>(value_) += std::get<std::complex<double>>(rhs.value_);
    epsilon_ = std::max(epsilon_, rhs.epsilon_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* e = std::get_if<Exact>(&value_)) {
    const auto& r = std::get<Exact>(rhs.value_);
    e->re -= r.re;
    e->im -= r.im;
  } else {
    std::get<std::complex<double>>(value_) -= std::get<std::complex<double>>(rhs.value_);
    epsilon_ = std::max(epsilon_, rhs.epsilon_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_backend(*this, rhs);
  if (auto* e = std::get_if<Exact>(&value_)) {
    const auto& r = std::get<Exact>(rhs.value_);
    if (sgn(e->im) == 0 && sgn(r.im) == 0) {
      e->re *= r.re;
    } else {
      mpq_class re = e->re * r.re - e->im * r.im;
      mpq_class im = e->re * r.im + e->im * r.re;
      e->re = std::move(re);
      e->im = std::move(im);
    }
  } else {
    std::get<std::complex<double>>(value_) *= std::get<std::complex<double>>(rhs.value_);
    epsilon_ = std::max(epsilon_, rhs.epsilon_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_backend(*this, rhs);
  if (rhs.is_zero()) fail(ErrorCode::division_by_zero, "division by zero");
  if (auto* e = std::get_if<Exact>(&value_)) {
    const auto& r = std::get<Exact>(rhs.value_);
    mpq_class d = r.re * r.re + r.im * r.im;
    mpq_class re = (e->re * r.re + e->im * r.im) / d;
    mpq_class im = (e->im * r.re - e->re * r.im) / d;
    e->re = std::move(re);
    e->im = std::move(im);
  } else {
    std::get<std::complex<double>>(value_) /= std::get<std::complex<double>>(rhs.value_);
    epsilon_ = std::max(epsilon_, rhs.epsilon_);
  }
  return *this;
}

OrderOutcome cmp_total(const Scalar& a, const Scalar& b) {
  require_same_backend(a, b);
  if (a.is_exact()) {
    int c = cmp(a.exact_re(), b.exact_re());
    if (c == 0) c = cmp(a.exact_im(), b.exact_im());
    return c < 0 ? OrderOutcome::less : c > 0 ? OrderOutcome::greater : OrderOutcome::equal;
  }
  const double eps = std::max(a.epsilon(), b.epsilon());
  auto za = a.to_complex();
  auto zb = b.to_complex();
  double dre = za.real() - zb.real();
  double dim = za.imag() - zb.imag();
  if (std::abs(dre) > eps) return dre < 0 ? OrderOutcome::less : OrderOutcome::greater;
  if (std::abs(dim) > eps) return dim < 0 ? OrderOutcome::less : OrderOutcome::greater;
  return OrderOutcome::equal;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return cmp_total(a, b) == OrderOutcome::equal;
}

std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) {
  switch (cmp_total(a, b)) {
    case OrderOutcome::less: return std::weak_ordering::less;
    case OrderOutcome::greater: return std::weak_ordering::greater;
    default: return std::weak_ordering::equivalent;
  }
}

std::string Scalar::to_string() const {
  if (is_exact()) return rational_to_string(exact_re()) + (sgn(exact_im()) < 0 ? "" : "+") +
                         rational_to_string(exact_im()) + "i";
  auto z = to_complex();
  return std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) + "i";
}

std::string_view to_string(OrderOutcome o) {
  switch (o) {
    case OrderOutcome::less: return "less";
    case OrderOutcome::equal: return "equal";
    case OrderOutcome::greater: return "greater";
  }
  return "equal";
}

namespace {

void require_ordered(const Scalar& z1, const Scalar& z2) {
  if (cmp_total(z1, z2) == OrderOutcome::greater)
    fail(ErrorCode::order_precondition_failed, "expected z1 <= z2, got z1 > z2");
}

// Shared branch logic. Multiplying by z3 and dividing by z3 differ only in the
// sign of the imaginary part of the factor.
bool scaled_order_holds(const Scalar& z1, const Scalar& z2, const Scalar& x3, const Scalar& y3) {
  const Scalar zero = z1.zero_like();
  Scalar dx = z2.real() - z1.real();
  Scalar dy = z2.imag() - z1.imag();
  if (dx == zero) {
    // Equal real parts, so y1 < y2.
    if (y3 < zero) return true;
    return y3 == zero && x3 >= zero;
  }
  Scalar threshold = dy * y3 / dx;
  if (x3 > threshold) return true;
  if (x3 < threshold) return false;
  return -dy * x3 / dx <= y3;
}

}  // namespace

bool mul_preserves_order(const Scalar& z1, const Scalar& z2, const Scalar& z3) {
  require_same_backend(z1, z2);
  require_same_backend(z1, z3);
  require_ordered(z1, z2);
  if (z1 == z2) return true;
  return scaled_order_holds(z1, z2, z3.real(), z3.imag());
}

bool div_preserves_order(const Scalar& z1, const Scalar& z2, const Scalar& z3) {
  require_same_backend(z1, z2);
  require_same_backend(z1, z3);
  if (z3.is_zero()) fail(ErrorCode::division_by_zero, "division by zero");
  require_ordered(z1, z2);
  if (z1 == z2) return true;
  return scaled_order_holds(z1, z2, z3.real(), -z3.imag());
}

OrderOutcome recip_cmp(const Scalar& z1, const Scalar& z2) {
  require_same_backend(z1, z2);
  if (z1.is_zero() || z2.is_zero()) fail(ErrorCode::division_by_zero, "reciprocal of zero");
  Scalar n1 = z1.norm2();
  Scalar n2 = z2.norm2();
  Scalar a1 = z1.real() / n1;
  Scalar a2 = z2.real() / n2;
  if (auto c = cmp_total(a1, a2); c != OrderOutcome::equal) return c;
  return cmp_total(-z1.imag() / n1, -z2.imag() / n2);
}

bool product_nonneg(const Scalar& z1, const Scalar& z2) {
  require_same_backend(z1, z2);
  const Scalar zero = z1.zero_like();
  if (z1 < zero || z2 < zero)
    fail(ErrorCode::order_precondition_failed, "product_nonneg needs both factors >= 0");
  Scalar x1 = z1.real(), y1 = z1.imag(), x2 = z2.real(), y2 = z2.imag();
  Scalar re = x1 * x2 - y1 * y2;
  if (re > zero) return true;
  if (re < zero) return false;
  return x1 * y2 + x2 * y1 >= zero;
}

}  // namespace sno
