#include "sno/matrix_function.hpp"

#include <algorithm>
#include <cmath>

namespace sno {

namespace {

bool derivative_vanishes(const AnalyticFunction& f, const Scalar& value) {
  if (f.is_polynomial() && value.is_exact()) return value.is_zero();
  return std::abs(value.to_complex()) <= kDerivativeEpsilon;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

Matrix f_jordan_block(const AnalyticFunction& f, const Scalar& lambda, std::size_t n) {
  f.require_in_radius(lambda);
  if (n > 0 && n - 1 > f.max_order())
    fail(ErrorCode::derivative_order_exceeded,
         "a block of size " + std::to_string(n) + " needs derivatives up to order " +
             std::to_string(n - 1));
  const Backend backend = lambda.backend();
  Matrix out(n, n, backend);
  Scalar factorial = Scalar::one(backend);
  for (std::size_t q = 0; q < n; ++q) {
    if (q > 0) factorial *= Scalar::from_int(static_cast<long>(q), backend);
    Scalar entry = f.derivative(lambda, static_cast<unsigned>(q)) / factorial;
    for (std::size_t i = 0; i + q < n; ++i) out(i, i + q) = entry;
  }
  return out;
}

std::optional<unsigned> kappa_or_none(const AnalyticFunction& f, const Scalar& lambda,
                                      unsigned max_order) {
  f.require_in_radius(lambda);
  const unsigned top = std::min(max_order, f.max_order());
  for (unsigned k = 1; k <= top; ++k)
    if (!derivative_vanishes(f, f.derivative(lambda, k))) return k;
  if (top < max_order)
    fail(ErrorCode::derivative_order_exceeded,
         f.name() + " has no derivative of order " + std::to_string(top + 1));
  return std::nullopt;
}

KappaResult derivative_order_kappa(const AnalyticFunction& f, const Scalar& lambda,
                                   unsigned max_order) {
  if (max_order == 0) fail(ErrorCode::schema_violation, "max_order must be at least 1");
  auto k = kappa_or_none(f, lambda, max_order);
  if (!k)
    fail(ErrorCode::kappa_not_found,
         "derivatives of " + f.name() + " vanish at " + lambda.to_string() + " up to order " +
             std::to_string(max_order));
  return {*k, f.derivative(lambda, *k)};
}

BlockSplit split_block(int n, int kappa) {
  if (n < 1 || kappa < 1) fail(ErrorCode::schema_violation, "split_block needs n, kappa >= 1");
  const int c = ceil_div(n, kappa);
  const int ell = n + kappa - kappa * c;
  std::vector<int> parts(static_cast<std::size_t>(ell), c);
  if (c > 1) parts.insert(parts.end(), static_cast<std::size_t>(kappa - ell), c - 1);
  BlockSplit out{Partition(std::move(parts)), {}};
  const int len = std::max<int>(1, static_cast<int>(out.sizes.length()));
  for (int j = 1; j <= len; ++j)
    out.gdod.push_back(j <= ell ? n - j * c : n + j - ell - j * c);
  return out;
}

Partition rank_oracle_split(int n, int kappa) {
  if (n < 1 || kappa < 1) fail(ErrorCode::schema_violation, "rank_oracle_split needs n, kappa >= 1");
  const Backend backend = Backend::exact();
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), backend);
  // Nonzero band from the κ-th superdiagonal on; the values are arbitrary
  // nonzero rationals, as for f^{(q)}(λ)/q! with f^{(κ)}(λ) != 0.
  for (int q = kappa; q < n; ++q)
    for (int i = 0; i + q < n; ++i)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(i + q)) =
          Scalar::exact(mpq_class(q + 1, q * q + 2));
  return repr_from_matrix(m, {Scalar::zero(backend)}).nilpotent().front();
}

int gdod_two_blocks(int n1, int n2, int kappa, int j) {
  if (n2 < 1 || n1 < n2 || kappa < 1 || j < 1)
    fail(ErrorCode::schema_violation, "gdod_two_blocks needs n1 >= n2 >= 1, kappa >= 1, j >= 1");
  const int c1 = ceil_div(n1, kappa), c2 = ceil_div(n2, kappa);
  const int l1 = n1 + kappa - kappa * c1, l2 = n2 + kappa - kappa * c2;
  const int n = n1 + n2;
  if (j == 1) return n1 - c1;
  if (c1 == c2) {
    const int c = c1;
    if (j <= l1 + l2) return n - j * c;
    return n - (l1 + l2) * c - (j - l1 - l2) * (c - 1);
  }
  if (c1 - 1 == c2) {
    if (j <= l1) return n - j * c1;
    if (j <= kappa + l2) return n - l1 * c1 - (j - l1) * c2;
    return n - l1 * c1 - (kappa - l1 + l2) * c2 - (j - kappa - l2) * (c2 - 1);
  }
  if (j <= l1) return n - j * c1;
  if (j <= kappa) return n - l1 * c1 - (j - l1) * (c1 - 1);
  if (j <= kappa + l2) return n - l1 * c1 - (kappa - l1) * (c1 - 1) - (j - kappa) * c2;
  return n - l1 * c1 - (kappa - l1) * (c1 - 1) - l2 * c2 - (j - kappa - l2) * (c2 - 1);
}

Partition eta(const Partition& sizes, std::optional<unsigned> kappa) {
  std::vector<Partition> pieces;
  for (int n : sizes.parts()) {
    const int k = kappa ? static_cast<int>(std::min<unsigned>(*kappa, static_cast<unsigned>(n))) : n;
    pieces.push_back(split_block(n, k).sizes);
  }
  return merge_desc(pieces);
}

Partition eta(const AnalyticFunction& f, const Scalar& lambda, const Partition& sizes) {
  return eta(sizes, kappa_or_none(f, lambda, static_cast<unsigned>(std::max(1, sizes.largest()))));
}

FxRepresentation repr_of_fx(const AnalyticFunction& f, const SNRepresentation& rx) {
  struct Group {
    Scalar value;
    std::vector<std::size_t> members;
  };
  std::vector<EigenGdod> info;
  std::vector<Group> groups;
  for (std::size_t k = 0; k < rx.distinct_count(); ++k) {
    const Scalar& lambda = rx.distinct()[k];
    const Partition& m = rx.nilpotent()[k];
    auto kappa = kappa_or_none(f, lambda, static_cast<unsigned>(m.largest()));
    Partition e = eta(m, kappa);
    info.push_back({lambda, kappa, e, gdod_vector(e, m)});
    Scalar value = f(lambda);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return g.value == value; });
    if (it == groups.end())
      groups.push_back({value, {k}});
    else
      it->members.push_back(k);
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return cmp_total(a.value, b.value) == OrderOutcome::greater;
  });
  ComplexVector distinct;
  std::vector<Partition> nilpotent;
  FxRepresentation out;
  for (const auto& g : groups) {
    std::vector<Partition> etas;
    for (std::size_t k : g.members) {
      etas.push_back(info[k].eta);
      out.per_eigenvalue.push_back(info[k]);
    }
    distinct.push_back(g.value);
    nilpotent.push_back(merge_desc(etas));
  }
  out.repr = SNRepresentation(std::move(distinct), std::move(nilpotent));
  return out;
}

Matrix f_of_jordan(const AnalyticFunction& f, const SNRepresentation& rx) {
  const Backend backend = rx.distinct().front().backend();
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < rx.distinct_count(); ++k)
    for (int n : rx.nilpotent()[k].parts())
      blocks.push_back(f_jordan_block(f, rx.distinct()[k], static_cast<std::size_t>(n)));
  return direct_sum(blocks, backend);
}

std::vector<DirectedGdod> gdod_f_g(const AnalyticFunction& f, const SNRepresentation& rx,
                                   const AnalyticFunction& g, const SNRepresentation& ry) {
  const auto a = repr_of_fx(f, rx).repr.nilpotent();
  const auto b = repr_of_fx(g, ry).repr.nilpotent();
  const std::size_t len = std::max(a.size(), b.size());
  const Partition empty;
  std::vector<DirectedGdod> out;
  for (std::size_t k = 0; k < len; ++k) {
    const Partition& ak = k < a.size() ? a[k] : empty;
    const Partition& bk = k < b.size() ? b[k] : empty;
    if (dominance_check(bk, ak))
      out.push_back({true, gdod_vector(bk, ak)});
    else if (dominance_check(ak, bk))
      out.push_back({false, gdod_vector(ak, bk)});
    else
      fail(ErrorCode::incomparable_nilpotent,
           "nilpotent parts at index " + std::to_string(k + 1) + " are incomparable: " +
               ak.to_string() + " vs " + bk.to_string());
  }
  return out;
}

}  // namespace sno
