#include "incpart/set_partition.hpp"

#include <algorithm>

#include "incpart/errors.hpp"

namespace incpart {

SetPartition::SetPartition(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  if (assignment_.empty()) throw DomainError("set partition of an empty set");
  for (int block : assignment_) {
    if (block < 1 || block > num_blocks_ + 1) {
      throw DomainError("assignment is not a restricted-growth sequence");
    }
    num_blocks_ = std::max(num_blocks_, block);
  }
}

SetPartition SetPartition::from_blocks(const std::vector<std::vector<int>>& blocks) {
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw DomainError("empty block");
    for (int element : blocks[b]) {
      if (element < 1 || element > n || owner[static_cast<std::size_t>(element - 1)] != -1) {
        throw DomainError("blocks do not partition {1..n}");
      }
      owner[static_cast<std::size_t>(element - 1)] = static_cast<int>(b);
    }
  }
  // Relabel blocks in order of appearance.
  std::vector<int> label(blocks.size(), 0);
  std::vector<int> assignment;
  assignment.reserve(owner.size());
  int next_label = 0;
  for (int b : owner) {
    auto& l = label[static_cast<std::size_t>(b)];
    if (l == 0) l = ++next_label;
    assignment.push_back(l);
  }
  return SetPartition(std::move(assignment));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks_));
  for (int i = 1; i <= n(); ++i) out[static_cast<std::size_t>(block_of(i) - 1)].push_back(i);
  return out;
}

std::string to_string(const SetPartition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(block[i]);
    }
    out += '}';
  }
  return out;
}

std::string to_rgs_string(const SetPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.assignment().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.assignment()[i]);
  }
  return out;
}

SetPartitionStream::SetPartitionStream(int n, EnumerationLimits limits) {
  if (n < 1) throw DomainError("set partition enumeration requires n >= 1");
  if (n > limits.max_n) {
    throw DomainError("n=" + std::to_string(n) + " exceeds the enumeration cap " +
                      std::to_string(limits.max_n));
  }
  rgs_.assign(static_cast<std::size_t>(n), 1);
  prefix_max_.assign(static_cast<std::size_t>(n), 1);
}

bool SetPartitionStream::advance() {
  // Increment the rightmost position that can still grow, reset the tail to 1.
  for (std::size_t i = rgs_.size(); i-- > 1;) {
    if (rgs_[i] <= prefix_max_[i - 1]) {
      ++rgs_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
      for (std::size_t j = i + 1; j < rgs_.size(); ++j) {
        rgs_[j] = 1;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::optional<SetPartition> SetPartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return SetPartition(rgs_);
}

SetPartitionStream enumerate_set_partitions(int n, EnumerationLimits limits) {
  return SetPartitionStream(n, limits);
}

Composition block_sizes(const SetPartition& p) {
  std::vector<int> sizes(static_cast<std::size_t>(p.num_blocks()), 0);
  for (int block : p.assignment()) ++sizes[static_cast<std::size_t>(block - 1)];
  return Composition(std::move(sizes));
}

IncrementSequence increments(const SetPartition& p) {
  std::vector<int> bits;
  bits.reserve(p.assignment().size());
  int seen = 0;
  for (int block : p.assignment()) {
    // In a restricted-growth sequence a new maximum marks a block's first element.
    bits.push_back(block > seen ? 1 : 0);
    seen = std::max(seen, block);
  }
  return IncrementSequence(std::move(bits));
}

}  // namespace incpart
