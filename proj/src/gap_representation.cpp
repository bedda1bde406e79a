#include "incpart/gap_representation.hpp"

#include <algorithm>

namespace incpart {

BinarySequenceLaw independent_binary_law(const std::vector<Rational>& v) {
  if (v.empty() || v.front() != 1) throw DomainError("independent sequence law needs v_1 = 1");
  for (const auto& vi : v) {
    if (vi < 0 || vi > 1) throw DomainError("marginal " + to_string(vi) + " outside [0, 1]");
  }
  const int n = static_cast<int>(v.size());
  BinarySequenceLaw::Table table;
  for (auto& d : all_compositions(n)) {
    const auto y = gap_decode(d);
    Rational product = 1;
    for (int i = 2; i <= n; ++i) {
      const auto& vi = v[static_cast<std::size_t>(i - 1)];
      product *= y.bit(i) == 1 ? vi : Rational(1 - vi);
    }
    table.emplace(std::move(d), std::move(product));
  }
  return BinarySequenceLaw(n, std::move(table));
}

std::string to_string(const SizeMultiset& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(m[i]);
  }
  return out + "}";
}

Rational UnorderedSizeDistribution::total_mass() const {
  Rational sum = 0;
  for (const auto& [m, value] : table) sum += value;
  return sum;
}

namespace {

void drop_zeros(UnorderedSizeDistribution& dist) {
  std::erase_if(dist.table, [](const auto& entry) { return entry.second == 0; });
}

}  // namespace

UnorderedSizeDistribution gap_size_distribution(const BinarySequenceLaw& y) {
  y.require_complete();
  UnorderedSizeDistribution dist{y.n(), {}};
  for (const auto& [d, value] : y.table()) dist.table[sorted_parts(d)] += value;
  drop_zeros(dist);
  return dist;
}

UnorderedSizeDistribution block_size_distribution(const PartitionLaw& p) {
  p.require_complete();
  UnorderedSizeDistribution dist{p.n(), {}};
  for (const auto& [b, value] : p.table()) {
    dist.table[sorted_parts(b)] += value * Rational(count_partitions_with_sizes(b));
  }
  drop_zeros(dist);
  return dist;
}

template <typename Tag>
std::vector<std::vector<Rational>> partial_sum_distributions(const CompositionLaw<Tag>& law) {
  law.require_complete();
  const int n = law.n();
  std::vector<std::vector<Rational>> out;
  for (int m = 1; m <= n; ++m) out.emplace_back(static_cast<std::size_t>(m) + 1, Rational(0));
  for (const auto& [d, value] : law.table()) {
    const auto x = gap_decode(d);
    int sum = 0;
    for (int m = 1; m <= n; ++m) {
      sum += x.bit(m);
      out[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(sum)] += value;
    }
  }
  return out;
}

template std::vector<std::vector<Rational>> partial_sum_distributions(const IncrementLaw&);
template std::vector<std::vector<Rational>> partial_sum_distributions(const BinarySequenceLaw&);

std::vector<Rational> marginals_from_partial_sums(
    const std::vector<std::vector<Rational>>& distributions) {
  std::vector<Rational> u;
  Rational previous_mean = 0;
  for (const auto& dist : distributions) {
    Rational mean = 0;
    for (std::size_t j = 0; j < dist.size(); ++j) mean += dist[j] * static_cast<unsigned long>(j);
    u.push_back(mean - previous_mean);
    previous_mean = mean;
  }
  return u;
}

PartialSumReport verify_partial_sum_identity(const PartitionLaw& p, const BinarySequenceLaw& y) {
  if (p.n() != y.n()) {
    throw DomainError("partition law has n=" + std::to_string(p.n()) +
                      " but sequence law has n=" + std::to_string(y.n()));
  }
  const auto x_sums = partial_sum_distributions(forward_map(p));
  const auto y_sums = partial_sum_distributions(y);
  PartialSumReport report;
  report.holds = true;
  for (std::size_t i = 0; i < x_sums.size(); ++i) {
    PartialSumComparison row{static_cast<int>(i) + 1, x_sums[i], y_sums[i],
                             x_sums[i] == y_sums[i]};
    if (!row.equal && report.holds) {
      report.holds = false;
      report.first_mismatch = row.m;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace incpart
