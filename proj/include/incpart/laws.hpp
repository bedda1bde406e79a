#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "incpart/coefficients.hpp"
#include "incpart/composition.hpp"
#include "incpart/errors.hpp"
#include "incpart/rational.hpp"

namespace incpart {

struct PartitionLawTag {
  static constexpr std::string_view kind = "partition";
};
struct IncrementLawTag {
  static constexpr std::string_view kind = "increment";
};

/// Exact rational table indexed by compositions of a fixed n. Keys must be
/// compositions of n; completeness is checked by the operations that need it.
template <typename Tag>
class CompositionLaw {
 public:
  using Table = std::map<Composition, Rational>;

  CompositionLaw(int n, Table table) : n_(n), table_(std::move(table)) {
    if (n < 1) throw DomainError("law requires n >= 1");
    for (const auto& [c, value] : table_) {
      if (c.n() != n_) {
        throw DomainError(std::string(Tag::kind) + " law for n=" + std::to_string(n_) +
                          " has key " + to_string(c) + " summing to " + std::to_string(c.n()));
      }
    }
  }

  /// Missing compositions get probability zero.
  static CompositionLaw zero_filled(int n, Table sparse) {
    CompositionLaw law(n, std::move(sparse));
    for (auto& c : all_compositions(n)) law.table_.try_emplace(std::move(c), 0);
    return law;
  }

  static constexpr std::string_view kind() { return Tag::kind; }
  int n() const { return n_; }
  const Table& table() const { return table_; }

  const Rational& at(const Composition& c) const {
    auto it = table_.find(c);
    if (it == table_.end()) {
      throw IncompleteLawError(std::string(Tag::kind) + " law has no entry for " + to_string(c));
    }
    return it->second;
  }

  std::vector<Composition> missing() const {
    std::vector<Composition> out;
    for (auto& c : all_compositions(n_)) {
      if (!table_.contains(c)) out.push_back(std::move(c));
    }
    return out;
  }

  void require_complete() const {
    if (table_.size() == (std::size_t{1} << (n_ - 1))) return;
    auto gaps = missing();
    throw IncompleteLawError(std::string(Tag::kind) + " law is missing " +
                             std::to_string(gaps.size()) + " composition(s), first " +
                             to_string(gaps.front()));
  }

  friend bool operator==(const CompositionLaw&, const CompositionLaw&) = default;

 private:
  int n_;
  Table table_;
};

using PartitionLaw = CompositionLaw<PartitionLawTag>;
using IncrementLaw = CompositionLaw<IncrementLawTag>;

struct LawValidity {
  bool valid = false;
  std::optional<Composition> culprit;
  std::string message;
  /// sum_b p(b) * count(b) for partition laws, sum_d q(d) for increment laws.
  Rational total_mass;
};

/// Non-negativity and unit weighted mass. Throws IncompleteLawError on a
/// missing composition.
LawValidity validate_partition_law(const PartitionLaw& p);
LawValidity validate_increment_law(const IncrementLaw& q);

/// The block-diagonal linear system q = R p, one RTable per k.
class LinearSystem {
 public:
  explicit LinearSystem(int n, CoefficientMethod method = CoefficientMethod::formula);

  int n() const { return n_; }
  const RTable& block(int k) const { return blocks_.at(static_cast<std::size_t>(k - 1)); }

 private:
  int n_;
  std::vector<RTable> blocks_;
};

/// q(d) = sum over b in S_{n,k} of p(b) r(d; b).
IncrementLaw forward_map(const PartitionLaw& p, const LinearSystem& system);
IncrementLaw forward_map(const PartitionLaw& p);

struct InversionResult {
  PartitionLaw law;
  bool feasible = false;
  std::optional<Composition> culprit;
  std::string reason;
};

/// Triangular solve over each S_{n,k} in decreasing dictionary order.
/// An infeasible q is reported in the result, not thrown.
InversionResult invert_map(const IncrementLaw& q, const LinearSystem& system);
InversionResult invert_map(const IncrementLaw& q);

/// p(b) depends only on the multiset of parts of b.
bool is_exchangeable(const PartitionLaw& p);

/// (u_1, ..., u_n), u_i = P(X_i = 1).
std::vector<Rational> increment_marginals(const IncrementLaw& q);

/// q(d) == prod_{i>=2} (u_i or 1 - u_i) for every gap composition d.
bool is_independent_increments(const IncrementLaw& q);

/// Random positive weight per set partition, normalized, then averaged over
/// partitions sharing the same ordered block sizes. Always partially exchangeable.
PartitionLaw random_partially_exchangeable_law(int n, std::mt19937_64& rng,
                                                EnumerationLimits limits = {});

/// Random positive weight per multiset of block sizes. Always exchangeable.
PartitionLaw random_exchangeable_law(int n, std::mt19937_64& rng);

/// Parts sorted in decreasing order.
std::vector<int> sorted_parts(const Composition& c);

}  // namespace incpart
