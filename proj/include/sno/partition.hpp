#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sno {

// A non-increasing list of positive block sizes. The empty partition (of 0)
// is valid.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);
  // Sorts first; still rejects non-positive parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int total() const;
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  // Zero past the end.
  int part(std::size_t k) const { return k < parts_.size() ? parts_[k] : 0; }
  // Sum of the first j parts, zero-padded.
  int prefix(std::size_t j) const;
  bool all_ones() const;

  std::string to_string() const;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// p ⊴ q: every zero-padded prefix sum of p is at most q's. The totals may
// differ (p = (3,2) precedes q = (4,2)).
bool dominance_check(const Partition& p, const Partition& q);

// Strict dominance p ◁ q.
inline bool strictly_dominated(const Partition& p, const Partition& q) {
  return dominance_check(p, q) && !(p == q);
}

// Generalized dominance ordering distance: prefix_j(q) - prefix_j(p), j >= 1.
// Throws NotDominated unless p ⊴ q.
int gdod(const Partition& p, const Partition& q, std::size_t j);

// [gdod(p, q, 1), ..., gdod(p, q, len)] with len = max(length(p), length(q)).
std::vector<int> gdod_vector(const Partition& p, const Partition& q);

// Multiset union of the parts, non-increasing.
Partition merge_desc(const std::vector<Partition>& parts);

// Every partition of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace sno
