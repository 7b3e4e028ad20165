#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sno/function.hpp"
#include "sno/matrix.hpp"
#include "sno/sn_repr.hpp"

namespace sno {

enum class MonotoneCase { A, B, C, D, E, none };

std::string_view to_string(MonotoneCase c);

struct ClauseCheck {
  MonotoneCase clause = MonotoneCase::none;
  bool holds = false;
  std::string detail;
};

struct MonotonicityCertificate {
  MonotoneCase result = MonotoneCase::none;
  // 1 when the spectra differ (weak majorization), 2 when they agree and only
  // the nilpotent parts are ordered.
  int hypothesis_case = 1;
  std::vector<ClauseCheck> clauses;  // in evaluation order
};

// Tries the clauses of the hypothesis case in order and reports the first
// that holds. Requires compare_sno(rx, ry) to be strict_less or weak_less;
// throws NotSNOrdered otherwise.
MonotonicityCertificate monotonicity_certificate(const AnalyticFunction& f,
                                                 const SNRepresentation& rx,
                                                 const SNRepresentation& ry);

// compare_sno of the two mapped representations.
SNOVerdict monotonicity_verify_direct(const AnalyticFunction& f, const SNRepresentation& rx,
                                      const SNRepresentation& ry);

// κ per distinct eigenvalue; nullopt means every derivative up to the largest
// block vanishes, which acts like an infinite κ.
using KappaList = std::vector<std::optional<unsigned>>;

KappaList kappa_list(const AnalyticFunction& f, const SNRepresentation& r);

// The κ pattern shared by clauses D and E: κ_x > 1 for some eigenvalue and
// κ_y = 1 for all. Taking the lists explicitly lets the pattern be tested on
// its own. When rx and ry share their spectrum, as the second case requires,
// the two lists come from the same (f, λ) pairs and the pattern cannot hold.
bool kappa_pattern_holds(const KappaList& kx, const KappaList& ky);

// Clause E's structural part: mx[k] ⊴ my[k] for every k.
bool entrywise_dominated(const std::vector<Partition>& mx, const std::vector<Partition>& my);

struct Residual {
  std::string name;
  double value = 0.0;
};

struct HpIdentityReport {
  std::vector<Residual> residuals;
  double max_residual = 0.0;
};

// Builds W1, W2 from the contraction C, W3 and P for the given t, and
// reports the residuals of unitarity, C(I-C^H C)^{1/2} = (I-CC^H)^{1/2}C, the
// block forms of W^H diag(X, 0) W and the pinching of W3^H diag(X, Y) W3.
// Float backend; throws ContractionViolated when ||C^H C|| > 1.
HpIdentityReport hp_identities_check(const Matrix& c, const Matrix& x, const Matrix& y, double t);
inline HpIdentityReport hp_identities_check(const Matrix& c, const Matrix& x, double t) {
  return hp_identities_check(c, x, x, t);
}

// Hermitian square root of a positive semidefinite matrix (negative
// eigenvalues from rounding are clamped to zero).
Matrix psd_sqrt(const Matrix& m);

struct SnoComparison {
  std::optional<SNRepresentation> left;
  std::optional<SNRepresentation> right;
  std::optional<SNOVerdict> verdict;
  std::string relation;  // sno_relation label, or empty on error
  std::string error;     // error name when a spectrum could not be obtained
};

struct ConvexityPoint {
  Scalar t;
  SnoComparison comparison;
  // All spectra involved lie inside the radius of analyticity of f.
  bool within_radius = true;
};

struct ConvexityVariant {
  std::vector<ConvexityPoint> points;
  // Every t gave equal, strict_less or weak_less.
  bool consistent = true;
};

struct ConvexityReport {
  ConvexityVariant raw;
  ConvexityVariant shifted;  // f - f(0)
};

// f(tA + (1-t)B) against t f(A) + (1-t) f(B) for every t in [0, 1]. A
// missing spectrum is recorded per t.
ConvexityReport convexity_check(const AnalyticFunction& f, const Matrix& a, const Matrix& b,
                                const ComplexVector& ts);

struct HpItem {
  int item = 2;
  SnoComparison comparison;
  std::vector<Residual> residuals;
};

struct HpItemReport {
  std::vector<HpItem> items;
};

// Items 2 to 4: f(C^H X C) vs C^H f(X) C with C = cs[0] and X = xs[0]; the
// sum over i of C_i^H X_i C_i through the stacked C and block-diagonal X; and
// the pinching P X P + (I-P) Y (I-P) with Y = xs[1] when present, else xs[0].
// Throws ContractionViolated or NotAProjection.
HpItemReport hp_item_checks(const AnalyticFunction& f, const std::vector<Matrix>& xs,
                            const std::vector<Matrix>& cs, const Matrix& p);

// Eigenvalues of a triangular or 2x2 matrix, or of a float Hermitian matrix.
std::optional<ComplexVector> known_spectrum(const Matrix& m);

}  // namespace sno
