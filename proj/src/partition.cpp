#include "sno/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sno/error.hpp"

namespace sno {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) fail(ErrorCode::invalid_partition, "partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      fail(ErrorCode::invalid_partition, "partition parts must be non-increasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::prefix(std::size_t j) const {
  int s = 0;
  for (std::size_t k = 0; k < j && k < parts_.size(); ++k) s += parts_[k];
  return s;
}

bool Partition::all_ones() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(parts_[k]);
  }
  return s + "]";
}

bool dominance_check(const Partition& p, const Partition& q) {
  const std::size_t len = std::max(p.length(), q.length());
  int sp = 0, sq = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sp += p.part(k);
    sq += q.part(k);
    if (sp > sq) return false;
  }
  return true;
}

int gdod(const Partition& p, const Partition& q, std::size_t j) {
  if (!dominance_check(p, q))
    fail(ErrorCode::not_dominated, p.to_string() + " is not dominated by " + q.to_string());
  return q.prefix(j) - p.prefix(j);
}

std::vector<int> gdod_vector(const Partition& p, const Partition& q) {
  if (!dominance_check(p, q))
    fail(ErrorCode::not_dominated, p.to_string() + " is not dominated by " + q.to_string());
  const std::size_t len = std::max(p.length(), q.length());
  std::vector<int> out;
  for (std::size_t j = 1; j <= len; ++j) out.push_back(q.prefix(j) - p.prefix(j));
  return out;
}

Partition merge_desc(const std::vector<Partition>& parts) {
  std::vector<int> all;
  for (const auto& p : parts) all.insert(all.end(), p.parts().begin(), p.parts().end());
  return Partition::from_unsorted(std::move(all));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace sno
