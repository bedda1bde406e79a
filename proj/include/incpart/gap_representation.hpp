#pragma once

#include <map>
#include <string>
#include <vector>

#include "incpart/laws.hpp"

namespace incpart {

struct BinarySequenceLawTag {
  static constexpr std::string_view kind = "binary-sequence";
};

/// Law of (Y_1, ..., Y_n) with Y_1 = 1, keyed by gap encoding like IncrementLaw.
using BinarySequenceLaw = CompositionLaw<BinarySequenceLawTag>;

/// Product law with P(Y_i = 1) = v_i. Throws DomainError unless v_1 = 1 and
/// every v_i lies in [0, 1].
BinarySequenceLaw independent_binary_law(const std::vector<Rational>& v);

/// A multiset of positive integers, canonicalized as a decreasing tuple.
using SizeMultiset = std::vector<int>;

std::string to_string(const SizeMultiset& m);

/// Law of an unordered size multiset summing to n.
struct UnorderedSizeDistribution {
  int n = 0;
  std::map<SizeMultiset, Rational> table;

  Rational total_mass() const;
  friend bool operator==(const UnorderedSizeDistribution&,
                         const UnorderedSizeDistribution&) = default;
};

/// Gap multiset of Y, including the final gap n + 1 - n_k.
UnorderedSizeDistribution gap_size_distribution(const BinarySequenceLaw& y);

/// Block-size multiset of Π: mass of m is the sum of p(b) count(b) over the
/// compositions b that sort to m.
UnorderedSizeDistribution block_size_distribution(const PartitionLaw& p);

struct PartialSumComparison {
  int m = 0;
  /// Index j holds P(sum of the first m entries = j), j = 0..m.
  std::vector<Rational> increments;
  std::vector<Rational> sequence;
  bool equal = false;
};

struct PartialSumReport {
  bool holds = false;
  std::vector<PartialSumComparison> rows;
  /// 0 when every row matches.
  int first_mismatch = 0;
};

/// Compares X_1 + ... + X_m (the block count of Π restricted to [m]) against
/// Y_1 + ... + Y_m in distribution for every m <= n.
/// Throws DomainError when the laws have different n.
PartialSumReport verify_partial_sum_identity(const PartitionLaw& p, const BinarySequenceLaw& y);

/// Distribution of S_m = X_1 + ... + X_m for m = 1..n, from any gap-keyed law.
template <typename Tag>
std::vector<std::vector<Rational>> partial_sum_distributions(const CompositionLaw<Tag>& law);

/// For independent increments, u_m = E[S_m] - E[S_{m-1}].
std::vector<Rational> marginals_from_partial_sums(
    const std::vector<std::vector<Rational>>& distributions);

}  // namespace incpart
