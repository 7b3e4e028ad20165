#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sno/matrix.hpp"
#include "sno/scalar.hpp"

namespace sno {

enum class MajorizationVerdict { strict, weak, none };

std::string_view to_string(MajorizationVerdict v);

// Stable sort into non-increasing order under cmp_total.
ComplexVector sort_desc(ComplexVector v);

// x ≺ y (strict: prefix sums of the sorted vectors bounded and totals equal)
// or x ≺_w y (weak: prefix sums bounded, totals differ).
MajorizationVerdict majorize_check(const ComplexVector& x, const ComplexVector& y);

// Weak majorization from below, i.e. strict or weak.
inline bool weakly_majorized(const ComplexVector& x, const ComplexVector& y) {
  return majorize_check(x, y) != MajorizationVerdict::none;
}

// T = beta*I + (1-beta)*Q with Q swapping positions i and j (0-based here,
// 1-based in JSON files).
struct TTransform {
  std::size_t i = 0;
  std::size_t j = 0;
  Scalar beta;
};

struct Decomposition {
  std::vector<TTransform> transforms;
  // Indices into `transforms` whose beta is not a real number in [0, 1]. Those
  // steps are not doubly stochastic in the classical sense.
  std::vector<std::size_t> flagged;
};

// v_i' = beta v_i + (1-beta) v_j and v_j' = beta v_j + (1-beta) v_i.
ComplexVector t_transform_apply(const ComplexVector& v, const TTransform& t);

// T-transforms taking sort_desc(y) to sort_desc(x), one position fixed per
// step. Throws NotMajorized unless x ≺ y.
Decomposition t_transform_decompose(const ComplexVector& x, const ComplexVector& y);

bool beta_in_unit_interval(const Scalar& beta);

// Square, every row and column sums to 1.
bool gds_check(const Matrix& p);

// The product T1 T2 ... Tk, so that sort_desc(x) = sort_desc(y) * P for a
// decomposition of (x, y).
Matrix gds_from_transforms(const std::vector<TTransform>& ts, std::size_t n, const Backend& backend);

// Row vector times matrix.
ComplexVector row_times(const ComplexVector& v, const Matrix& p);

}  // namespace sno
