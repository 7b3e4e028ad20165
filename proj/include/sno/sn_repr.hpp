#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sno/matrix.hpp"
#include "sno/partition.hpp"
#include "sno/scalar.hpp"

namespace sno {

struct JordanBlockGroup {
  Scalar eigenvalue;
  Partition sizes;
};

// Jordan blocks grouped by eigenvalue. Eigenvalues may repeat until the spec
// is canonicalized.
struct JordanSpec {
  std::vector<JordanBlockGroup> blocks;

  std::size_t dimension() const;
  Backend backend() const;
};

// Spectral and nilpotent parts of a matrix: distinct eigenvalues in strictly
// decreasing order, each with its Jordan block sizes.
class SNRepresentation {
 public:
  SNRepresentation() = default;
  SNRepresentation(ComplexVector distinct, std::vector<Partition> nilpotent);

  const ComplexVector& distinct() const { return distinct_; }
  const std::vector<Partition>& nilpotent() const { return nilpotent_; }
  std::size_t dimension() const;
  std::size_t distinct_count() const { return distinct_.size(); }

  // Each eigenvalue repeated by its algebraic multiplicity, non-increasing.
  ComplexVector spectral() const;
  JordanSpec to_spec() const;

 private:
  ComplexVector distinct_;
  std::vector<Partition> nilpotent_;
};

enum class SNOVerdict { equal, strict_less, weak_less, incomparable };

std::string_view to_string(SNOVerdict v);

inline bool is_less_or_equal(SNOVerdict v) { return v != SNOVerdict::incomparable; }

// Merges repeated eigenvalues and sorts. Throws EmptySpec for a spec of
// dimension zero.
SNRepresentation canonical_repr(const JordanSpec& spec);

// Jordan structure from rank sequences of (X - λI)^s, for each supplied
// eigenvalue (duplicates are ignored). Throws SpectrumMismatch when the
// eigenvalues miss part of the spectrum or include a non-eigenvalue.
SNRepresentation repr_from_matrix(const Matrix& x, const ComplexVector& eigenvalues);

// Eigenvalues read off a triangular or 2x2 matrix. SpectrumUnavailable
// otherwise.
SNRepresentation repr_from_accessible_matrix(const Matrix& x);

// "Is a below b?" for aligned lists of nilpotent partitions, zero-padded.
SNOVerdict compare_nilpotent(const std::vector<Partition>& a, const std::vector<Partition>& b);

// "Is rx below ry?" in the spectral and nilpotent order.
SNOVerdict compare_sno(const SNRepresentation& rx, const SNRepresentation& ry);

// Both directions folded into one label: equal, less, weak_less, greater,
// weak_greater or incomparable.
std::string_view sno_relation(const SNRepresentation& rx, const SNRepresentation& ry);

Matrix jordan_block(const Scalar& lambda, std::size_t n, const Backend& backend);

// The block-diagonal Jordan matrix of a spec, blocks in spec order.
Matrix jordan_matrix(const JordanSpec& spec);

// U (⊕ J) U^{-1}. Throws SingularTransform.
Matrix assemble(const JordanSpec& spec, const Matrix& u);

}  // namespace sno
