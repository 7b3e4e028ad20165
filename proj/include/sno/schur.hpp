#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sno/function.hpp"
#include "sno/majorization.hpp"
#include "sno/scalar.hpp"

namespace sno {

enum class Property : unsigned {
  increasing = 1u << 0,
  decreasing = 1u << 1,
  schur_convex = 1u << 2,
  schur_concave = 1u << 3,
  convex_affine = 1u << 4,
  concave_affine = 1u << 5,
};

using PropertySet = unsigned;

inline PropertySet props(std::initializer_list<Property> ps) {
  PropertySet s = 0;
  for (auto p : ps) s |= static_cast<unsigned>(p);
  return s;
}
inline bool has(PropertySet s, Property p) { return (s & static_cast<unsigned>(p)) != 0; }

std::vector<std::string> property_names(PropertySet s);
// Throws SchemaViolation on an unknown name.
Property property_from_name(const std::string& name);

// A symmetric function C^n -> C in the float backend.
class SymmetricFunction {
 public:
  using Value = std::function<std::complex<double>(const std::vector<std::complex<double>>&)>;
  using Gradient =
      std::function<std::vector<std::complex<double>>(const std::vector<std::complex<double>>&)>;

  struct Term {
    std::complex<double> coefficient;
    std::vector<unsigned> powers;
  };

  // "sum", "sumsq" or "product", with an analytic gradient.
  static SymmetricFunction builtin(const std::string& name, std::size_t arity);
  // Sum of coefficient * prod x_k^{powers_k}; gradient by finite differences.
  static SymmetricFunction polynomial(std::vector<Term> terms, std::size_t arity);
  static SymmetricFunction custom(std::string name, std::size_t arity, Value value,
                                  Gradient gradient = nullptr);

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  PropertySet declared = 0;

  std::complex<double> value(const std::vector<std::complex<double>>& x) const;
  Scalar value(const ComplexVector& x) const;
  // Complex partials df/dx_k. Central differences with step
  // 1e-6 * max(1, |x_k|) when no analytic gradient is available.
  std::vector<std::complex<double>> gradient(const std::vector<std::complex<double>>& x) const;
  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

  // Spot check of permutation symmetry at random points.
  bool looks_symmetric(std::uint64_t seed, int trials = 16) const;

 private:
  std::string name_;
  std::size_t arity_ = 0;
  Value value_;
  Gradient gradient_;
};

// Bounds on the transfer ε of a T-step: 0 <= Re ε <= c1, c2 <= Im ε <= c3.
struct DomainBox {
  double c1 = 1.0;
  double c2 = 0.0;
  double c3 = 0.0;
  // Slack for the sign tests, which see finite-difference noise.
  double tolerance = 1e-6;

  void validate() const;
};

struct OstrowskiEntry {
  std::size_t sample = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  double dr = 0.0;
  double di = 0.0;
  int matched_case = 1;  // 1..4
  bool pass = true;
};

struct OstrowskiReport {
  std::vector<OstrowskiEntry> entries;
  bool pass = true;
};

// Evaluates the four-case derivative condition for every sample and every
// ordered pair with x_i >= x_j.
OstrowskiReport schur_ostrowski_check(const SymmetricFunction& f, const DomainBox& box,
                                      const std::vector<ComplexVector>& samples);

// Where random y are drawn: Re in [re_lo, re_hi], Im in [im_lo, im_hi].
struct SampleDomain {
  double re_lo = -2.0;
  double re_hi = 2.0;
  double im_lo = 0.0;
  double im_hi = 0.0;
};

struct Counterexample {
  ComplexVector x;
  ComplexVector y;
  Scalar fx;
  Scalar fy;
  std::size_t trial = 0;
};

struct FalsifyResult {
  std::optional<Counterexample> counterexample;
  std::size_t trials_run = 0;
  // Trials whose x was not majorized by y under the total order (possible
  // with complex entries) and were therefore skipped.
  std::size_t skipped = 0;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Per-trial seed derived from the master seed.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

// Random search for x ≺ y with f(x) > f(y). x comes from y by random
// T-transforms with real beta in [0, 1].
FalsifyResult schur_convex_falsify(const SymmetricFunction& f, std::size_t n, std::size_t trials,
                                   std::uint64_t seed = kDefaultSeed,
                                   const SampleDomain& domain = {});

struct CompositionResult {
  std::optional<PropertySet> derived;  // nullopt: Unknown
  std::vector<int> rows;               // matching rows, 1-based
};

// f = g(h_1(x), ..., h_m(x)).
CompositionResult compose_table1(PropertySet g, PropertySet h);
// f = g(h(x_1), ..., h(x_n)), with h satisfying the complex-domain
// majorization condition (cdm_verified).
CompositionResult compose_table2(PropertySet g, PropertySet h, bool cdm_verified);

// α[h(y1), h(y2)] + (1-α)[h(y2), h(y1)] ≺ [h(y1), h(y2)].
bool cdm_condition_check(const AnalyticFunction& h, const Scalar& y1, const Scalar& y2,
                         const Scalar& alpha);

enum class MonotoneDirection { increasing, decreasing };

struct MonotonicityEvidence {
  bool holds = false;
  // Monotonicity case per consecutive pair of sorted sample points (1..4), or 0 when
  // the pair repeats a point.
  std::vector<int> cases;
  std::string reason;
};

// Strict monotonicity of f on a finite point set under the total order,
// checked both from the bivariate derivative conditions sampled on the
// segments between consecutive points and from direct evaluation.
MonotonicityEvidence monotone_on_points(const AnalyticFunction& f, const ComplexVector& points,
                                        MonotoneDirection direction);

enum class PreservingVerdict {
  certified_increasing,
  certified_decreasing,
  certified_entrywise,
  not_certified,
};

std::string_view to_string(PreservingVerdict v);

struct PreservingReport {
  PreservingVerdict verdict = PreservingVerdict::not_certified;
  // For certified_entrywise with a decreasing f the conclusion is
  // f(y) ≺_w f(x) instead of f(x) ≺_w f(y).
  bool reversed = false;
  std::string reason;
};

// Certifies f(x) ≺_w f(y) from x ≺_w y. Throws NotWeaklyMajorized.
PreservingReport majorization_preserving_check(const AnalyticFunction& f, const ComplexVector& x,
                                               const ComplexVector& y);

}  // namespace sno
