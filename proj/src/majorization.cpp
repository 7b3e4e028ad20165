#include "sno/majorization.hpp"

#include <algorithm>

namespace sno {

std::string_view to_string(MajorizationVerdict v) {
  switch (v) {
    case MajorizationVerdict::strict: return "strict";
    case MajorizationVerdict::weak: return "weak";
    case MajorizationVerdict::none: return "none";
  }
  return "none";
}

ComplexVector sort_desc(ComplexVector v) {
  std::stable_sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) {
    return cmp_total(a, b) == OrderOutcome::greater;
  });
  return v;
}

MajorizationVerdict majorize_check(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size())
    fail(ErrorCode::dimension_mismatch, "majorization needs vectors of one length");
  if (x.empty()) return MajorizationVerdict::strict;
  ComplexVector xs = sort_desc(x);
  ComplexVector ys = sort_desc(y);
  Scalar sx = xs[0].zero_like();
  Scalar sy = sx;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (cmp_total(sx, sy) == OrderOutcome::greater) return MajorizationVerdict::none;
  }
  return sx == sy ? MajorizationVerdict::strict : MajorizationVerdict::weak;
}

ComplexVector t_transform_apply(const ComplexVector& v, const TTransform& t) {
  if (t.i >= v.size() || t.j >= v.size())
    fail(ErrorCode::index_error, "T-transform index outside the vector");
  ComplexVector out = v;
  Scalar rest = t.beta.one_like() - t.beta;
  out[t.i] = t.beta * v[t.i] + rest * v[t.j];
  out[t.j] = t.beta * v[t.j] + rest * v[t.i];
  return out;
}

bool beta_in_unit_interval(const Scalar& beta) {
  return beta.is_real() && beta >= beta.zero_like() && beta <= beta.one_like();
}

namespace {

// Bubble the working vector back into non-increasing order with beta = 0
// swaps, recording each swap.
void resort_with_swaps(ComplexVector& w, Decomposition& out) {
  for (std::size_t pass = 0; pass < w.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (cmp_total(w[k], w[k + 1]) == OrderOutcome::less) {
        TTransform swap{k, k + 1, w[k].zero_like()};
        w = t_transform_apply(w, swap);
        out.transforms.push_back(swap);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
}

}  // namespace

Decomposition t_transform_decompose(const ComplexVector& x, const ComplexVector& y) {
  if (majorize_check(x, y) != MajorizationVerdict::strict)
    fail(ErrorCode::not_majorized, "x is not majorized by y");
  const ComplexVector target = sort_desc(x);
  ComplexVector w = sort_desc(y);
  Decomposition out;
  const std::size_t n = w.size();
  for (std::size_t step = 0; step <= n; ++step) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k)
      if (!(w[k] == target[k])) done = false;
    if (done) return out;

    std::size_t i = n;
    for (std::size_t k = 0; k < n; ++k)
      if (cmp_total(target[k], w[k]) == OrderOutcome::less) i = k;
    std::size_t j = n;
    for (std::size_t k = i + 1; k < n && i < n; ++k) {
      if (cmp_total(target[k], w[k]) == OrderOutcome::greater) {
        j = k;
        break;
      }
    }
    if (i == n || j == n)
      fail(ErrorCode::not_majorized, "no admissible index pair; inputs are not x ≺ y");

    Scalar gap_i = w[i] - target[i];
    Scalar gap_j = target[j] - w[j];
    Scalar eps = cmp_total(gap_i, gap_j) == OrderOutcome::greater ? gap_j : gap_i;
    Scalar beta = eps.one_like() - eps / (w[i] - w[j]);
    TTransform t{i, j, beta};
    w = t_transform_apply(w, t);
    if (!beta_in_unit_interval(beta)) out.flagged.push_back(out.transforms.size());
    out.transforms.push_back(t);
    resort_with_swaps(w, out);
  }
  fail(ErrorCode::not_majorized, "decomposition did not terminate within n steps");
}

bool gds_check(const Matrix& p) {
  if (!p.is_square()) fail(ErrorCode::dimension_mismatch, "doubly stochastic check needs a square matrix");
  const Scalar one = Scalar::one(p.backend());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Scalar row = Scalar::zero(p.backend());
    Scalar col = row;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      row += p(i, j);
      col += p(j, i);
    }
    if (!(row == one) || !(col == one)) return false;
  }
  return true;
}

Matrix gds_from_transforms(const std::vector<TTransform>& ts, std::size_t n, const Backend& backend) {
  Matrix p = Matrix::identity(n, backend);
  for (const auto& t : ts) {
    if (t.i >= n || t.j >= n) fail(ErrorCode::index_error, "T-transform index outside the matrix");
    Matrix tm = Matrix::identity(n, backend);
    if (t.i != t.j) {
      Scalar rest = t.beta.one_like() - t.beta;
      tm(t.i, t.i) = t.beta;
      tm(t.j, t.j) = t.beta;
      tm(t.i, t.j) = rest;
      tm(t.j, t.i) = rest;
    }
    p = p * tm;
  }
  return p;
}

ComplexVector row_times(const ComplexVector& v, const Matrix& p) {
  if (v.size() != p.rows()) fail(ErrorCode::dimension_mismatch, "row vector length mismatch");
  ComplexVector out(p.cols(), Scalar::zero(p.backend()));
  for (std::size_t j = 0; j < p.cols(); ++j)
    for (std::size_t i = 0; i < p.rows(); ++i) out[j] += v[i] * p(i, j);
  return out;
}

}  // namespace sno
