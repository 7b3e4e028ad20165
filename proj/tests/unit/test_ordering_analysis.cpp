#include <doctest.h>

#include <Eigen/Dense>

#include "sno/eigen_bridge.hpp"
#include "sno/error.hpp"
#include "sno/matrix_function.hpp"
#include "sno/ordering.hpp"
#include "support/gen.hpp"

using namespace sno;

namespace {

Scalar q(long n, long d = 1) { return Scalar::exact(mpq_class(n, d)); }

AnalyticFunction poly(ComplexVector c) { return AnalyticFunction::polynomial(std::move(c)); }

SNRepresentation rep(std::vector<JordanBlockGroup> groups) { return canonical_repr(JordanSpec{std::move(groups)}); }

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::schema_violation;
}

Matrix diag(std::initializer_list<long> d) {
  ComplexVector v;
  for (long x : d) v.push_back(q(x));
  return Matrix::diagonal(v, Backend::exact());
}

}  // namespace

TEST_CASE("kappa pattern wants some kappa above one on x and all ones on y") {
  using K = KappaList;
  CHECK(kappa_pattern_holds(K{2u, 1u}, K{1u, 1u}));
  CHECK(kappa_pattern_holds(K{std::nullopt}, K{1u}));
  CHECK_FALSE(kappa_pattern_holds(K{1u, 1u}, K{1u, 1u}));
  CHECK_FALSE(kappa_pattern_holds(K{3u}, K{2u}));
  CHECK_FALSE(kappa_pattern_holds(K{3u}, K{std::nullopt}));
}

TEST_CASE("kappa lists follow the distinct eigenvalues") {
  const auto sq = poly({q(0), q(0), q(1)});
  const auto r = rep({{q(1), {1}}, {q(0), {2}}});
  CHECK(kappa_list(sq, r) == KappaList{1u, 2u});
  // Every Jordan block is size 1 here, so no derivative is inspected past order 1.
  CHECK(kappa_list(poly({q(3)}), rep({{q(0), {1}}})) == KappaList{std::nullopt});
}

TEST_CASE("entrywise dominance of nilpotent parts") {
  CHECK(entrywise_dominated({{2, 1}, {1}}, {{3}, {1}}));
  CHECK_FALSE(entrywise_dominated({{3}, {1}}, {{2, 1}, {1}}));
  CHECK_FALSE(entrywise_dominated({{1}}, {{1}, {1}}));
}

TEST_CASE("identity on a Case I pair fires clause A") {
  const auto rx = rep({{q(1), {1}}, {q(0), {2}}});
  const auto ry = rep({{q(2), {1}}, {q(0), {1, 1}}});
  const auto cert = monotonicity_certificate(poly({q(0), q(1)}), rx, ry);
  CHECK(cert.hypothesis_case == 1);
  CHECK(cert.result == MonotoneCase::A);
  CHECK(monotonicity_verify_direct(poly({q(0), q(1)}), rx, ry) == SNOVerdict::weak_less);
}

TEST_CASE("Case II with a kappa pattern that does not hold gives None") {
  const Scalar l = q(2);
  // (z - 2)^2 + z: f'(2) = 1, so kappa = 1 everywhere.
  const auto f = poly({q(6), q(-3), q(1)});
  const auto rx = rep({{l, {1, 1}}});
  const auto ry = rep({{l, {2}}});
  const auto cert = monotonicity_certificate(f, rx, ry);
  CHECK(cert.hypothesis_case == 2);
  CHECK(cert.result == MonotoneCase::none);
  CHECK(cert.clauses.size() == 2);
}

TEST_CASE("unordered pairs are rejected") {
  const auto r = rep({{q(1), {2}}});
  CHECK(code_of([&] { monotonicity_certificate(poly({q(0), q(1)}), r, r); }) == ErrorCode::not_sn_ordered);
  const auto a = rep({{q(3), {1}}, {q(-5), {1}}});
  const auto b = rep({{q(2), {1}}, {q(1), {1}}});
  CHECK(code_of([&] { monotonicity_certificate(poly({q(0), q(1)}), a, b); }) == ErrorCode::not_sn_ordered);
}

TEST_CASE("certificates on random Case I pairs are confirmed directly") {
  gen::Rng rng(701);
  int fired = 0;
  for (int t = 0; t < 300; ++t) {
    JordanSpec sx, sy;
    const int m = static_cast<int>(rng.integer(1, 4));
    for (int k = 0; k < m; ++k) {
      const Scalar v = q(rng.integer(-3, 3));
      sy.blocks.push_back({v, Partition{1}});
      sx.blocks.push_back({v - q(rng.integer(0, 2)), Partition{1}});
    }
    const auto rx = canonical_repr(sx), ry = canonical_repr(sy);
    const auto f = poly({q(rng.integer(-2, 2)), q(rng.integer(-2, 2)), q(rng.integer(-1, 1))});
    MonotonicityCertificate cert;
    try {
      cert = monotonicity_certificate(f, rx, ry);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_sn_ordered);
      continue;
    }
    if (cert.result == MonotoneCase::none) continue;
    ++fired;
    const auto v = monotonicity_verify_direct(f, rx, ry);
    CHECK((v == SNOVerdict::strict_less || v == SNOVerdict::weak_less || v == SNOVerdict::equal));
  }
  CHECK(fired > 30);
}

TEST_CASE("convexity of z^2 between diag(0,2) and diag(1,1)") {
  const auto sq = poly({q(0), q(0), q(1)});
  const ComplexVector ts{q(0), q(1, 4), q(1, 2), q(1)};
  const auto report = convexity_check(sq, diag({0, 2}), diag({1, 1}), ts);
  REQUIRE(report.raw.points.size() == 4);
  CHECK(report.raw.consistent);
  CHECK(report.shifted.consistent);
  // Both sides coincide at the endpoints.
  for (const auto& p : report.raw.points) {
    REQUIRE(p.comparison.verdict);
    const bool endpoint = p.t == q(0) || p.t == q(1);
    CHECK(*p.comparison.verdict == (endpoint ? SNOVerdict::equal : SNOVerdict::weak_less));
  }
  CHECK(code_of([&] { convexity_check(sq, diag({0, 2}), diag({1, 1}), {q(2)}); }) == ErrorCode::schema_violation);
}

TEST_CASE("contraction identities hold and reject non-contractions") {
  gen::Rng rng(702);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<Eigen::Index>(rng.integer(1, 4));
    const Matrix c = from_eigen(gen::contraction(rng, n, rng.uniform(0.1, 0.99)));
    const Matrix x = from_eigen(gen::gaussian_matrix(rng, n));
    const auto r = hp_identities_check(c, x, 0.3);
    CHECK(r.residuals.size() == 9);
    CHECK(r.max_residual < 1e-9);
  }
  const Matrix big = from_eigen(2.0 * Eigen::MatrixXcd::Identity(2, 2));
  const Matrix x = from_eigen(Eigen::MatrixXcd::Identity(2, 2));
  CHECK(code_of([&] { hp_identities_check(big, x, 0.5); }) == ErrorCode::contraction_violated);
  CHECK(code_of([&] { hp_identities_check(x, x, 1.0); }) == ErrorCode::schema_violation);
}

TEST_CASE("psd square root squares back") {
  gen::Rng rng(703);
  const Eigen::MatrixXcd g = gen::gaussian_matrix(rng, 4);
  const Matrix m = from_eigen(g.adjoint() * g);
  const Matrix s = psd_sqrt(m);
  CHECK(residual(s * s, m) < 1e-9);
  CHECK(residual(s.adjoint(), s) < 1e-12);
}

TEST_CASE("items 2 to 4 on diagonal inputs") {
  const auto sq = poly({q(0), q(0), q(1)});
  const Matrix c = Matrix::diagonal({q(1, 2), q(1, 3)}, Backend::exact());
  const Matrix p = diag({1, 0});
  const auto report = hp_item_checks(sq, {diag({2, 1}), diag({0, 3})}, {c}, p);
  REQUIRE(report.items.size() == 3);
  CHECK(report.items[0].item == 2);
  for (const auto& item : report.items) {
    CHECK(item.comparison.verdict.has_value());
    for (const auto& r : item.residuals) CHECK(r.value == doctest::Approx(0.0));
  }
  CHECK(code_of([&] { hp_item_checks(sq, {diag({2, 1})}, {c}, diag({2, 0})); }) == ErrorCode::not_a_projection);
  CHECK(code_of([&] { hp_item_checks(sq, {diag({2, 1})}, {diag({2, 0})}, p); }) == ErrorCode::contraction_violated);
}

TEST_CASE("known spectrum covers float Hermitian matrices") {
  Eigen::MatrixXcd h(3, 3);
  h << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  const auto ev = known_spectrum(from_eigen(h));
  REQUIRE(ev);
  REQUIRE(ev->size() == 3);
  Eigen::MatrixXcd nonnormal(3, 3);
  nonnormal << 1, 2, 3, 0, 1, 0, 4, 0, 1;
  CHECK_FALSE(known_spectrum(from_eigen(nonnormal)));
}
