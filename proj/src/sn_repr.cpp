#include "sno/sn_repr.hpp"

#include <algorithm>
#include <numeric>

#include "sno/majorization.hpp"

namespace sno {

std::size_t JordanSpec::dimension() const {
  std::size_t m = 0;
  for (const auto& g : blocks) m += static_cast<std::size_t>(g.sizes.total());
  return m;
}

Backend JordanSpec::backend() const {
  return blocks.empty() ? Backend::exact() : blocks.front().eigenvalue.backend();
}

SNRepresentation::SNRepresentation(ComplexVector distinct, std::vector<Partition> nilpotent)
    : distinct_(std::move(distinct)), nilpotent_(std::move(nilpotent)) {
  if (distinct_.size() != nilpotent_.size())
    fail(ErrorCode::dimension_mismatch, "one partition per distinct eigenvalue");
  for (std::size_t k = 0; k + 1 < distinct_.size(); ++k)
    if (cmp_total(distinct_[k], distinct_[k + 1]) != OrderOutcome::greater)
      fail(ErrorCode::schema_violation, "distinct eigenvalues must be strictly decreasing");
  for (const auto& p : nilpotent_)
    if (p.empty()) fail(ErrorCode::invalid_partition, "an eigenvalue needs at least one block");
}

std::size_t SNRepresentation::dimension() const {
  std::size_t m = 0;
  for (const auto& p : nilpotent_) m += static_cast<std::size_t>(p.total());
  return m;
}

ComplexVector SNRepresentation::spectral() const {
  ComplexVector out;
  for (std::size_t k = 0; k < distinct_.size(); ++k)
    for (int r = 0; r < nilpotent_[k].total(); ++r) out.push_back(distinct_[k]);
  return out;
}

JordanSpec SNRepresentation::to_spec() const {
  JordanSpec spec;
  for (std::size_t k = 0; k < distinct_.size(); ++k) spec.blocks.push_back({distinct_[k], nilpotent_[k]});
  return spec;
}

std::string_view to_string(SNOVerdict v) {
  switch (v) {
    case SNOVerdict::equal: return "equal";
    case SNOVerdict::strict_less: return "strict_less";
    case SNOVerdict::weak_less: return "weak_less";
    case SNOVerdict::incomparable: return "incomparable";
  }
  return "incomparable";
}

SNRepresentation canonical_repr(const JordanSpec& spec) {
  if (spec.dimension() == 0) fail(ErrorCode::empty_spec, "Jordan spec has no blocks");
  std::vector<JordanBlockGroup> groups;
  for (const auto& g : spec.blocks) {
    if (g.sizes.empty()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const JordanBlockGroup& h) { return h.eigenvalue == g.eigenvalue; });
    if (it == groups.end())
      groups.push_back(g);
    else
      it->sizes = merge_desc({it->sizes, g.sizes});
  }
  std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return cmp_total(a.eigenvalue, b.eigenvalue) == OrderOutcome::greater;
  });
  ComplexVector distinct;
  std::vector<Partition> nilpotent;
  for (auto& g : groups) {
    distinct.push_back(g.eigenvalue);
    nilpotent.push_back(g.sizes);
  }
  return SNRepresentation(std::move(distinct), std::move(nilpotent));
}

namespace {

// Block sizes at one eigenvalue from the rank sequence of powers of X - λI.
Partition blocks_at(const Matrix& x, const Scalar& lambda) {
  const std::size_t m = x.rows();
  Matrix b = x - lambda * Matrix::identity(m, x.backend());
  std::vector<std::size_t> ranks{m};
  Matrix power = b;
  for (std::size_t s = 1; s <= m; ++s) {
    ranks.push_back(rank(power));
    if (ranks[s] == ranks[s - 1]) break;
    if (s < m) power = power * b;
  }
  // at_least[s] = number of blocks of size >= s.
  std::vector<int> parts;
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    const long at_least = static_cast<long>(ranks[s - 1]) - static_cast<long>(ranks[s]);
    const long next = s + 1 < ranks.size() ? static_cast<long>(ranks[s]) - static_cast<long>(ranks[s + 1]) : 0;
    for (long c = 0; c < at_least - next; ++c) parts.push_back(static_cast<int>(s));
  }
  return Partition::from_unsorted(std::move(parts));
}

}  // namespace

SNRepresentation repr_from_matrix(const Matrix& x, const ComplexVector& eigenvalues) {
  if (!x.is_square()) fail(ErrorCode::dimension_mismatch, "matrix must be square");
  if (x.rows() == 0) fail(ErrorCode::empty_spec, "empty matrix");
  JordanSpec spec;
  std::size_t covered = 0;
  for (const auto& lambda : eigenvalues) {
    if (lambda.is_exact() != x.backend().is_exact())
      fail(ErrorCode::backend_mismatch, "eigenvalue and matrix from different backends");
    bool seen = std::any_of(spec.blocks.begin(), spec.blocks.end(),
                            [&](const JordanBlockGroup& g) { return g.eigenvalue == lambda; });
    if (seen) continue;
    Partition p = blocks_at(x, lambda);
    if (p.empty())
      fail(ErrorCode::spectrum_mismatch, lambda.to_string() + " is not an eigenvalue");
    covered += static_cast<std::size_t>(p.total());
    spec.blocks.push_back({lambda, std::move(p)});
  }
  if (covered != x.rows())
    fail(ErrorCode::spectrum_mismatch,
         "eigenvalues account for " + std::to_string(covered) + " of " + std::to_string(x.rows()) +
             " dimensions");
  return canonical_repr(spec);
}

SNRepresentation repr_from_accessible_matrix(const Matrix& x) {
  auto ev = accessible_eigenvalues(x);
  if (!ev)
    fail(ErrorCode::spectrum_unavailable,
         "eigenvalues are only read from triangular or 2x2 matrices");
  return repr_from_matrix(x, *ev);
}

SNOVerdict compare_nilpotent(const std::vector<Partition>& a, const std::vector<Partition>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  static const Partition empty;
  for (std::size_t k = 0; k < len; ++k) {
    const Partition& ak = k < a.size() ? a[k] : empty;
    const Partition& bk = k < b.size() ? b[k] : empty;
    if (ak == bk) continue;
    return dominance_check(ak, bk) ? SNOVerdict::strict_less : SNOVerdict::incomparable;
  }
  return SNOVerdict::equal;
}

SNOVerdict compare_sno(const SNRepresentation& rx, const SNRepresentation& ry) {
  if (rx.dimension() != ry.dimension())
    fail(ErrorCode::dimension_mismatch, "SNO compares matrices of one dimension");
  ComplexVector sx = rx.spectral();
  ComplexVector sy = ry.spectral();
  bool same_spectrum = true;
  for (std::size_t k = 0; k < sx.size(); ++k)
    if (!(sx[k] == sy[k])) same_spectrum = false;
  if (same_spectrum) return compare_nilpotent(rx.nilpotent(), ry.nilpotent());
  return weakly_majorized(sx, sy) ? SNOVerdict::weak_less : SNOVerdict::incomparable;
}

std::string_view sno_relation(const SNRepresentation& rx, const SNRepresentation& ry) {
  SNOVerdict forward = compare_sno(rx, ry);
  if (forward == SNOVerdict::equal) return "equal";
  if (forward == SNOVerdict::strict_less) return "less";
  if (forward == SNOVerdict::weak_less) return "weak_less";
  SNOVerdict backward = compare_sno(ry, rx);
  if (backward == SNOVerdict::strict_less) return "greater";
  if (backward == SNOVerdict::weak_less) return "weak_greater";
  return "incomparable";
}

Matrix jordan_block(const Scalar& lambda, std::size_t n, const Backend& backend) {
  Matrix j(n, n, backend);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = Scalar::one(backend);
  }
  return j;
}

Matrix jordan_matrix(const JordanSpec& spec) {
  const Backend backend = spec.backend();
  std::vector<Matrix> blocks;
  for (const auto& g : spec.blocks)
    for (int size : g.sizes.parts())
      blocks.push_back(jordan_block(g.eigenvalue, static_cast<std::size_t>(size), backend));
  return direct_sum(blocks, backend);
}

Matrix assemble(const JordanSpec& spec, const Matrix& u) {
  Matrix j = jordan_matrix(spec);
  if (u.rows() != j.rows() || !u.is_square())
    fail(ErrorCode::dimension_mismatch, "transform size does not match the spec");
  return u * j * inverse(u);
}

}  // namespace sno
