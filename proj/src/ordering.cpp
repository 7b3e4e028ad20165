#include "sno/ordering.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "sno/eigen_bridge.hpp"
#include "sno/majorization.hpp"
#include "sno/matrix_function.hpp"
#include "sno/schur.hpp"

namespace sno {

namespace {

constexpr double kContractionSlack = 1e-10;
constexpr double kProjectionTolerance = 1e-9;

ComplexVector mapped_sorted(const AnalyticFunction& f, const ComplexVector& v) {
  ComplexVector out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(f(z));
  return sort_desc(std::move(out));
}

bool same_vector(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

int largest_block(const SNRepresentation& r) {
  int out = 0;
  for (const auto& p : r.nilpotent()) out = std::max(out, p.largest());
  return out;
}

ClauseCheck clause_c(const AnalyticFunction& f, const SNRepresentation& rx,
                     const SNRepresentation& ry) {
  ClauseCheck c{MonotoneCase::C, false, {}};
  if (!same_vector(mapped_sorted(f, rx.spectral()), mapped_sorted(f, ry.spectral()))) {
    c.detail = "mapped spectra differ";
    return c;
  }
  const int top = largest_block(rx);
  for (const auto& lambda : rx.distinct()) {
    auto k = kappa_or_none(f, lambda, static_cast<unsigned>(top));
    if (k && static_cast<int>(*k) < top) {
      c.detail = "kappa " + std::to_string(*k) + " at " + lambda.to_string() +
                 " is below the largest block " + std::to_string(top) + " of X";
      return c;
    }
  }
  for (const auto& lambda : ry.distinct()) {
    auto k = kappa_or_none(f, lambda, 1);
    if (!k || *k != 1) {
      c.detail = "f' vanishes at the Y eigenvalue " + lambda.to_string();
      return c;
    }
  }
  const auto& my = ry.nilpotent();
  if (std::all_of(my.begin(), my.end(), [](const Partition& p) { return p.all_ones(); })) {
    c.detail = "every Jordan block of Y has size 1";
    return c;
  }
  c.holds = true;
  return c;
}

SNRepresentation repr_with_spectrum(const Matrix& m, const ComplexVector& ev) {
  return repr_from_matrix(m, ev);
}

bool recoverable(ErrorCode code) {
  return code == ErrorCode::spectrum_unavailable || code == ErrorCode::rank_ambiguous ||
         code == ErrorCode::spectrum_mismatch || code == ErrorCode::outside_analyticity_radius;
}

bool inside_radius(const AnalyticFunction& f, const ComplexVector& ev) {
  if (std::isinf(f.radius())) return true;
  return std::all_of(ev.begin(), ev.end(),
                     [&](const Scalar& z) { return std::abs(z.to_complex()) < f.radius(); });
}

ComplexVector require_spectrum(const Matrix& m, const char* what) {
  auto ev = known_spectrum(m);
  if (!ev) fail(ErrorCode::spectrum_unavailable, std::string("eigenvalues of ") + what + " are not accessible");
  return *ev;
}

// f(arg) against `right`, both through their SN representations.
SnoComparison compare_mapped(const AnalyticFunction& f, const Matrix& arg, const Matrix& right,
                             bool* within_radius = nullptr) {
  SnoComparison out;
  try {
    const ComplexVector ev = require_spectrum(arg, "the left argument");
    if (within_radius) *within_radius = *within_radius && inside_radius(f, ev);
    const Matrix left = apply_function(f, arg, ev);
    ComplexVector fev;
    for (const auto& z : ev) fev.push_back(f(z));
    out.left = repr_with_spectrum(left, fev);
    out.right = repr_with_spectrum(right, require_spectrum(right, "the right side"));
    out.verdict = compare_sno(*out.left, *out.right);
    out.relation = std::string(sno_relation(*out.left, *out.right));
  } catch (const Error& e) {
    if (!recoverable(e.code())) throw;
    if (within_radius && e.code() == ErrorCode::outside_analyticity_radius) *within_radius = false;
    out.left.reset();
    out.right.reset();
    out.verdict.reset();
    out.relation.clear();
    out.error = std::string(error_name(e.code())) + ": " + e.what();
  }
  return out;
}

Eigen::MatrixXcd eigen_psd_sqrt(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

double unitarity_residual(const Eigen::MatrixXcd& w) {
  const auto id = Eigen::MatrixXcd::Identity(w.rows(), w.cols());
  return std::max((w.adjoint() * w - id).norm(), (w * w.adjoint() - id).norm());
}

Eigen::MatrixXcd blocks(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                        const Eigen::MatrixXcd& c, const Eigen::MatrixXcd& d) {
  Eigen::MatrixXcd out(a.rows() + c.rows(), a.cols() + b.cols());
  out << a, b, c, d;
  return out;
}

void require_contraction(const Matrix& gram, const std::string& what) {
  const double norm = spectral_norm(gram);
  if (norm > 1.0 + kContractionSlack)
    fail(ErrorCode::contraction_violated,
         what + " has spectral norm " + std::to_string(norm) + ", above 1");
}

void require_square(const Matrix& m, std::size_t n, const char* what) {
  if (!m.is_square() || m.rows() != n)
    fail(ErrorCode::dimension_mismatch, std::string(what) + " must be " + std::to_string(n) + "x" +
                                            std::to_string(n));
}

}  // namespace

std::string_view to_string(MonotoneCase c) {
  switch (c) {
    case MonotoneCase::A: return "A";
    case MonotoneCase::B: return "B";
    case MonotoneCase::C: return "C";
    case MonotoneCase::D: return "D";
    case MonotoneCase::E: return "E";
    case MonotoneCase::none: return "None";
  }
  return "None";
}

KappaList kappa_list(const AnalyticFunction& f, const SNRepresentation& r) {
  KappaList out;
  for (std::size_t k = 0; k < r.distinct_count(); ++k)
    out.push_back(kappa_or_none(f, r.distinct()[k],
                                static_cast<unsigned>(std::max(1, r.nilpotent()[k].largest()))));
  return out;
}

bool kappa_pattern_holds(const KappaList& kx, const KappaList& ky) {
  const bool some_x = std::any_of(kx.begin(), kx.end(), [](const auto& k) { return !k || *k > 1; });
  const bool all_y = std::all_of(ky.begin(), ky.end(), [](const auto& k) { return k && *k == 1; });
  return some_x && all_y;
}

bool entrywise_dominated(const std::vector<Partition>& mx, const std::vector<Partition>& my) {
  if (mx.size() != my.size()) return false;
  for (std::size_t k = 0; k < mx.size(); ++k)
    if (!dominance_check(mx[k], my[k])) return false;
  return true;
}

MonotonicityCertificate monotonicity_certificate(const AnalyticFunction& f,
                                                 const SNRepresentation& rx,
                                                 const SNRepresentation& ry) {
  const SNOVerdict hyp = compare_sno(rx, ry);
  if (hyp != SNOVerdict::strict_less && hyp != SNOVerdict::weak_less)
    fail(ErrorCode::not_sn_ordered,
         "X is not strictly below Y (compare_sno gave " + std::string(to_string(hyp)) + ")");

  MonotonicityCertificate cert;
  auto settle = [&](ClauseCheck c) {
    cert.clauses.push_back(c);
    if (c.holds && cert.result == MonotoneCase::none) cert.result = c.clause;
    return c.holds;
  };

  if (hyp == SNOVerdict::weak_less) {
    cert.hypothesis_case = 1;
    const auto pres = majorization_preserving_check(f, rx.spectral(), ry.spectral());
    const bool inc = pres.verdict == PreservingVerdict::certified_increasing;
    const bool dec = pres.verdict == PreservingVerdict::certified_decreasing;
    if (settle({MonotoneCase::A, inc, inc ? "" : pres.reason})) return cert;
    if (settle({MonotoneCase::B, dec, dec ? "" : pres.reason})) return cert;
    settle(clause_c(f, rx, ry));
    return cert;
  }

  cert.hypothesis_case = 2;
  const KappaList kx = kappa_list(f, rx), ky = kappa_list(f, ry);
  const bool pattern = kappa_pattern_holds(kx, ky);
  const std::string pattern_note = pattern ? "" : "kappa pattern fails (kappa_x > 1 somewhere, kappa_y = 1 everywhere)";

  const auto inc = monotone_on_points(f, rx.distinct(), MonotoneDirection::increasing);
  ClauseCheck d{MonotoneCase::D, inc.holds && pattern, {}};
  if (!inc.holds) d.detail = "f is not increasing on the spectrum: " + inc.reason;
  else d.detail = pattern_note;
  if (settle(d)) return cert;

  const auto dec = monotone_on_points(f, rx.distinct(), MonotoneDirection::decreasing);
  const bool entrywise = entrywise_dominated(rx.nilpotent(), ry.nilpotent());
  ClauseCheck e{MonotoneCase::E, entrywise && dec.holds && pattern, {}};
  if (!entrywise) e.detail = "nilpotent parts are not dominated eigenvalue by eigenvalue";
  else if (!dec.holds) e.detail = "f is not decreasing on the spectrum: " + dec.reason;
  else e.detail = pattern_note;
  settle(e);
  return cert;
}

SNOVerdict monotonicity_verify_direct(const AnalyticFunction& f, const SNRepresentation& rx,
                                      const SNRepresentation& ry) {
  return compare_sno(repr_of_fx(f, rx).repr, repr_of_fx(f, ry).repr);
}

Matrix psd_sqrt(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::dimension_mismatch, "square root of a non-square matrix");
  const double eps = m.backend().is_exact() ? kDefaultEpsilon : m.backend().epsilon;
  return from_eigen(eigen_psd_sqrt(to_eigen(m)), eps);
}

HpIdentityReport hp_identities_check(const Matrix& c, const Matrix& x, const Matrix& y, double t) {
  if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::schema_violation, "t must lie strictly between 0 and 1");
  const std::size_t n = c.rows();
  require_square(c, n, "C");
  require_square(x, n, "X");
  require_square(y, n, "Y");
  require_contraction(c.adjoint() * c, "C^H C");

  using M = Eigen::MatrixXcd;
  const M C = to_eigen(c), X = to_eigen(x), Y = to_eigen(y);
  const M I = M::Identity(n, n), O = M::Zero(n, n);
  const M S = eigen_psd_sqrt(I - C * C.adjoint());
  const M T = eigen_psd_sqrt(I - C.adjoint() * C);
  const M W1 = blocks(C, S, T, -C.adjoint());
  const M W2 = blocks(C, -S, T, C.adjoint());
  const M Xbar = blocks(X, O, O, O);
  const M A1 = W1.adjoint() * Xbar * W1;
  const M A2 = W2.adjoint() * Xbar * W2;
  const M CXC = C.adjoint() * X * C, CXS = C.adjoint() * X * S, SXC = S * X * C, SXS = S * X * S;

  const double rt = std::sqrt(t), rs = std::sqrt(1.0 - t);
  const M W3 = blocks(rt * I, -rs * I, rs * I, rt * I);
  const M P = blocks(I, O, O, O), Q = M::Identity(2 * n, 2 * n) - P;
  const M Xacute = blocks(X, O, O, Y);
  const M V = W3.adjoint() * Xacute * W3;
  const M pinched = P * V * P + Q * V * Q;

  HpIdentityReport r;
  r.residuals = {
      {"w1_unitary", unitarity_residual(W1)},
      {"w2_unitary", unitarity_residual(W2)},
      {"w3_unitary", unitarity_residual(W3)},
      {"commutation", (C * T - S * C).norm()},
      {"commutation_adjoint", (C.adjoint() * S - T * C.adjoint()).norm()},
      {"w1_block_form", (A1 - blocks(CXC, CXS, SXC, SXS)).norm()},
      {"w2_block_form", (A2 - blocks(CXC, -CXS, -SXC, SXS)).norm()},
      {"w_average", ((A1 + A2) / 2.0 - blocks(CXC, O, O, SXS)).norm()},
      {"w3_pinching",
       (pinched - blocks(t * X + (1.0 - t) * Y, O, O, (1.0 - t) * X + t * Y)).norm()},
  };
  for (const auto& e : r.residuals) r.max_residual = std::max(r.max_residual, e.value);
  return r;
}

std::optional<ComplexVector> known_spectrum(const Matrix& m) {
  if (auto ev = accessible_eigenvalues(m)) return ev;
  if (m.backend().is_exact() || !m.is_square()) return std::nullopt;
  const Eigen::MatrixXcd e = to_eigen(m);
  const double scale = std::max(1.0, e.norm());
  if ((e - e.adjoint()).norm() > kProjectionTolerance * scale) return std::nullopt;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((e + e.adjoint()) / 2.0,
                                                     Eigen::EigenvaluesOnly);
  ComplexVector out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    out.push_back(Scalar::floating(es.eigenvalues()(k), 0.0, m.backend().epsilon));
  return out;
}

ConvexityReport convexity_check(const AnalyticFunction& f, const Matrix& a, const Matrix& b,
                                const ComplexVector& ts) {
  if (!a.is_square()) fail(ErrorCode::dimension_mismatch, "A must be square");
  require_square(b, a.rows(), "B");
  if (!(a.backend() == b.backend())) fail(ErrorCode::backend_mismatch, "A and B use different backends");
  const Backend backend = a.backend();
  const Scalar zero = Scalar::zero(backend), one = Scalar::one(backend);
  ComplexVector tv;
  for (const auto& t : ts) {
    Scalar s = t.to_backend(backend);
    if (!s.is_real() || s < zero || s > one)
      fail(ErrorCode::schema_violation, "t must be real and in [0, 1], got " + t.to_string());
    tv.push_back(s);
  }

  auto run = [&](const AnalyticFunction& g) {
    ConvexityVariant v;
    for (const auto& t : tv) {
      ConvexityPoint pt;
      pt.t = t;
      const Matrix mix = t * a + (one - t) * b;
      try {
        const ComplexVector ea = require_spectrum(a, "A");
        const ComplexVector eb = require_spectrum(b, "B");
        pt.within_radius = inside_radius(g, ea) && inside_radius(g, eb);
        const Matrix right = t * apply_function(g, a, ea) + (one - t) * apply_function(g, b, eb);
        pt.comparison = compare_mapped(g, mix, right, &pt.within_radius);
      } catch (const Error& e) {
        if (!recoverable(e.code())) throw;
        if (e.code() == ErrorCode::outside_analyticity_radius) pt.within_radius = false;
        pt.comparison.error = std::string(error_name(e.code())) + ": " + e.what();
      }
      const auto& verdict = pt.comparison.verdict;
      if (!verdict || *verdict == SNOVerdict::incomparable) v.consistent = false;
      v.points.push_back(std::move(pt));
    }
    return v;
  };

  ConvexityReport report;
  report.raw = run(f);
  report.shifted = run(f.shifted());
  return report;
}

HpItemReport hp_item_checks(const AnalyticFunction& f, const std::vector<Matrix>& xs,
                            const std::vector<Matrix>& cs, const Matrix& p) {
  if (xs.empty() || cs.empty()) fail(ErrorCode::schema_violation, "at least one X and one C are needed");
  if (xs.size() < cs.size()) fail(ErrorCode::schema_violation, "one X is needed per C");
  const std::size_t n = xs[0].rows();
  const Backend backend = xs[0].backend();
  for (const auto& x : xs) {
    require_square(x, n, "X");
    if (!(x.backend() == backend)) fail(ErrorCode::backend_mismatch, "matrices use different backends");
  }
  for (const auto& c : cs) {
    require_square(c, n, "C");
    if (!(c.backend() == backend)) fail(ErrorCode::backend_mismatch, "matrices use different backends");
  }
  require_square(p, n, "P");
  if (!(p.backend() == backend)) fail(ErrorCode::backend_mismatch, "matrices use different backends");

  const Matrix& c0 = cs[0];
  require_contraction(c0.adjoint() * c0, "C^H C");
  Matrix gram(n, n, backend);
  for (const auto& c : cs) gram += c.adjoint() * c;
  require_contraction(gram, "the sum of C_i^H C_i");

  const Matrix pp = p * p;
  const Matrix ph = p.adjoint();
  const bool projection = backend.is_exact()
                              ? pp.approx_equal(p) && ph.approx_equal(p)
                              : residual(pp, p) <= kProjectionTolerance && residual(ph, p) <= kProjectionTolerance;
  if (!projection) fail(ErrorCode::not_a_projection, "P is not an orthogonal projection");

  HpItemReport report;

  {
    const Matrix& x = xs[0];
    const Matrix arg = c0.adjoint() * x * c0;
    const Matrix right = c0.adjoint() * apply_function(f, x, require_spectrum(x, "X")) * c0;
    report.items.push_back({2, compare_mapped(f, arg, right), {}});
  }

  {
    const std::size_t ell = cs.size();
    Matrix stacked(ell * n, n, backend);
    std::vector<Matrix> xblocks, fblocks;
    Matrix sum(n, n, backend), fsum(n, n, backend);
    for (std::size_t i = 0; i < ell; ++i) {
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col) stacked(i * n + r, col) = cs[i](r, col);
      const Matrix fx = apply_function(f, xs[i], require_spectrum(xs[i], "X_i"));
      xblocks.push_back(xs[i]);
      fblocks.push_back(fx);
      sum += cs[i].adjoint() * xs[i] * cs[i];
      fsum += cs[i].adjoint() * fx * cs[i];
    }
    const Matrix arg = stacked.adjoint() * direct_sum(xblocks, backend) * stacked;
    const Matrix right = stacked.adjoint() * direct_sum(fblocks, backend) * stacked;
    HpItem item{3, compare_mapped(f, arg, right), {}};
    item.residuals = {{"stacked_vs_sum", residual(arg, sum)},
                      {"stacked_vs_sum_mapped", residual(right, fsum)}};
    report.items.push_back(std::move(item));
  }

  {
    const Matrix& x = xs[0];
    const Matrix& y = xs.size() > 1 ? xs[1] : xs[0];
    const Matrix q = Matrix::identity(n, backend) - p;
    const Matrix arg = p * x * p + q * y * q;
    const Matrix right = p * apply_function(f, x, require_spectrum(x, "X")) * p +
                         q * apply_function(f, y, require_spectrum(y, "Y")) * q;
    Matrix stacked(2 * n, n, backend);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        stacked(r, col) = p(r, col);
        stacked(n + r, col) = q(r, col);
      }
    const Matrix via_sum = stacked.adjoint() * direct_sum({x, y}, backend) * stacked;
    HpItem item{4, compare_mapped(f, arg, right), {}};
    item.residuals = {{"pinching_vs_sum", residual(arg, via_sum)}};
    report.items.push_back(std::move(item));
  }
  return report;
}

}  // namespace sno
