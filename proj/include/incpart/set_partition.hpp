#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incpart/composition.hpp"

namespace incpart {

/// A partition of {1..n} stored as a restricted-growth sequence: element i
/// belongs to block assignment[i-1], blocks numbered 1.. in order of appearance.
class SetPartition {
 public:
  /// Throws DomainError if `assignment` is not a restricted-growth sequence.
  explicit SetPartition(std::vector<int> assignment);

  /// Builds from explicit blocks of 1-based elements, in any order.
  /// Throws DomainError unless the blocks partition {1..n}.
  static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks);

  int n() const { return static_cast<int>(assignment_.size()); }
  int num_blocks() const { return num_blocks_; }
  const std::vector<int>& assignment() const { return assignment_; }
  /// 1-based: block index of element i.
  int block_of(int i) const { return assignment_[static_cast<std::size_t>(i - 1)]; }

  /// Blocks A_1..A_k in order of appearance, elements ascending.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<int> assignment_;
  int num_blocks_ = 0;
};

/// "{1,3,4}{2}"
std::string to_string(const SetPartition& p);
/// "1 2 1 1"
std::string to_rgs_string(const SetPartition& p);

struct EnumerationLimits {
  int max_n = 12;
};

/// Single-consumer stream over all Bell(n) partitions of [n], in
/// lexicographic order of their restricted-growth sequences.
class SetPartitionStream {
 public:
  /// Throws DomainError for n < 1 or n > limits.max_n.
  explicit SetPartitionStream(int n, EnumerationLimits limits = {});

  std::optional<SetPartition> next();

 private:
  bool advance();

  std::vector<int> rgs_;
  // prefix_max_[i] = max(rgs_[0..i])
  std::vector<int> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

SetPartitionStream enumerate_set_partitions(int n, EnumerationLimits limits = {});

template <typename Fn>
void for_each_set_partition(int n, Fn&& fn, EnumerationLimits limits = {}) {
  SetPartitionStream stream(n, limits);
  while (auto p = stream.next()) fn(*p);
}

/// B(Π): block sizes in order of appearance.
Composition block_sizes(const SetPartition& p);
/// X_i = 1 iff i is the smallest element of its block.
IncrementSequence increments(const SetPartition& p);

}  // namespace incpart
