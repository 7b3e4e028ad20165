#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sno/function.hpp"
#include "sno/partition.hpp"
#include "sno/sn_repr.hpp"

namespace sno {

// n x n upper-triangular Toeplitz matrix with f^{(q)}(λ)/q! on the q-th
// superdiagonal.
Matrix f_jordan_block(const AnalyticFunction& f, const Scalar& lambda, std::size_t n);

struct KappaResult {
  unsigned kappa = 1;
  Scalar witness;  // f^{(kappa)}(λ)
};

// Smallest κ in [1, max_order] with f^{(κ)}(λ) != 0. Exact for exact
// polynomials; |.| > kDerivativeEpsilon otherwise. Throws KappaNotFound.
KappaResult derivative_order_kappa(const AnalyticFunction& f, const Scalar& lambda,
                                   unsigned max_order);

// κ, or nullopt when every derivative up to max_order vanishes.
std::optional<unsigned> kappa_or_none(const AnalyticFunction& f, const Scalar& lambda,
                                      unsigned max_order);

struct BlockSplit {
  Partition sizes;
  std::vector<int> gdod;  // against the partition (n), j = 1..κ
};

// Jordan sizes of f(J_n(λ)) when f' ... f^{(κ-1)} vanish at λ and
// f^{(κ)}(λ) != 0: ℓ blocks of size ⌈n/κ⌉ and κ-ℓ of size ⌈n/κ⌉-1, with
// ℓ = n + κ - κ⌈n/κ⌉.
BlockSplit split_block(int n, int kappa);

// The same sizes read from the rank sequence of powers of an explicit
// nilpotent band matrix whose first nonzero superdiagonal is the κ-th.
Partition rank_oracle_split(int n, int kappa);

// GDOD between the merged split of J_{n1} ⊕ J_{n2} and (n1, n2), j = 1..2κ,
// from the three closed-form cases. Requires n1 >= n2 >= 1.
int gdod_two_blocks(int n1, int n2, int kappa, int j);

// merge_desc of split_block over the blocks; κ = nullopt means "locally
// constant", which gives all ones.
Partition eta(const Partition& sizes, std::optional<unsigned> kappa);
Partition eta(const AnalyticFunction& f, const Scalar& lambda, const Partition& sizes);

struct EigenGdod {
  Scalar eigenvalue;          // λ_k of X
  std::optional<unsigned> kappa;
  Partition eta;
  std::vector<int> gdod;      // prefix(m_k) - prefix(η_k)
};

struct FxRepresentation {
  SNRepresentation repr;
  // One entry per distinct eigenvalue of X, in the order of f(λ) in repr
  // (ties between colliding eigenvalues keep the order of X).
  std::vector<EigenGdod> per_eigenvalue;
};

FxRepresentation repr_of_fx(const AnalyticFunction& f, const SNRepresentation& rx);

// f applied block by block to the Jordan matrix of rx: ⊕ f(J).
Matrix f_of_jordan(const AnalyticFunction& f, const SNRepresentation& rx);

struct DirectedGdod {
  bool g_below_f = true;  // η_g ⊴ η_f at this index; otherwise η_f ⊴ η_g
  std::vector<int> values;
};

// Per aligned eigenvalue index of f(X) and g(Y), the GDOD in whichever
// direction dominance holds. Throws IncomparableNilpotent naming the index.
std::vector<DirectedGdod> gdod_f_g(const AnalyticFunction& f, const SNRepresentation& rx,
                                   const AnalyticFunction& g, const SNRepresentation& ry);

}  // namespace sno
