#include "incpart/laws.hpp"

#include <algorithm>
#include <functional>

#include "incpart/set_partition.hpp"

namespace incpart {

namespace {

template <typename Law>
LawValidity validate(const Law& law, const std::function<BigInt(const Composition&)>& weight) {
  law.require_complete();
  LawValidity report;
  report.total_mass = 0;
  for (const auto& [c, value] : law.table()) {
    if (value < 0) {
      report.culprit = c;
      report.message = "negative value " + to_string(value) + " at " + to_string(c);
      return report;
    }
    report.total_mass += value * Rational(weight(c));
  }
  if (report.total_mass != 1) {
    report.message = "total mass is " + to_string(report.total_mass) + ", expected 1/1";
    return report;
  }
  report.valid = true;
  return report;
}

}  // namespace

LawValidity validate_partition_law(const PartitionLaw& p) {
  return validate(p, [](const Composition& b) { return count_partitions_with_sizes(b); });
}

LawValidity validate_increment_law(const IncrementLaw& q) {
  return validate(q, [](const Composition&) { return BigInt(1); });
}

LinearSystem::LinearSystem(int n, CoefficientMethod method) : n_(n) {
  if (n < 1) throw DomainError("linear system requires n >= 1");
  blocks_.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) blocks_.emplace_back(n, k, method);
}

IncrementLaw forward_map(const PartitionLaw& p, const LinearSystem& system) {
  if (system.n() != p.n()) throw DomainError("linear system built for a different n");
  p.require_complete();
  IncrementLaw::Table q;
  for (int k = 1; k <= p.n(); ++k) {
    const RTable& r = system.block(k);
    for (std::size_t i = 0; i < r.size(); ++i) {
      Rational sum = 0;
      // r(y_i; y_j) vanishes for j > i.
      for (std::size_t j = 0; j <= i; ++j) {
        if (r.at(i, j) != 0) sum += p.at(r.order()[j]) * Rational(r.at(i, j));
      }
      q.emplace(r.order()[i], sum);
    }
  }
  return IncrementLaw(p.n(), std::move(q));
}

IncrementLaw forward_map(const PartitionLaw& p) { return forward_map(p, LinearSystem(p.n())); }

InversionResult invert_map(const IncrementLaw& q, const LinearSystem& system) {
  if (system.n() != q.n()) throw DomainError("linear system built for a different n");
  q.require_complete();
  PartitionLaw::Table p;
  for (int k = 1; k <= q.n(); ++k) {
    const RTable& r = system.block(k);
    std::vector<Rational> solved;
    solved.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      Rational value = q.at(r.order()[i]);
      for (std::size_t j = 0; j < i; ++j) {
        if (r.at(i, j) != 0) value -= solved[j] * Rational(r.at(i, j));
      }
      solved.push_back(value);
      p.emplace(r.order()[i], std::move(value));
    }
  }
  InversionResult result{PartitionLaw(q.n(), std::move(p)), false, std::nullopt, {}};
  auto validity = validate_partition_law(result.law);
  result.feasible = validity.valid;
  result.culprit = validity.culprit;
  if (!validity.valid) {
    result.reason = "increment law is not realizable by a partially exchangeable partition: " +
                    validity.message;
  }
  return result;
}

InversionResult invert_map(const IncrementLaw& q) { return invert_map(q, LinearSystem(q.n())); }

std::vector<int> sorted_parts(const Composition& c) {
  auto parts = c.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

bool is_exchangeable(const PartitionLaw& p) {
  p.require_complete();
  std::map<std::vector<int>, const Rational*> representative;
  for (const auto& [b, value] : p.table()) {
    auto [it, inserted] = representative.try_emplace(sorted_parts(b), &value);
    if (!inserted && *it->second != value) return false;
  }
  return true;
}

std::vector<Rational> increment_marginals(const IncrementLaw& q) {
  q.require_complete();
  std::vector<Rational> u(static_cast<std::size_t>(q.n()), Rational(0));
  for (const auto& [d, value] : q.table()) {
    const auto x = gap_decode(d);
    for (int i = 1; i <= q.n(); ++i) {
      if (x.bit(i) == 1) u[static_cast<std::size_t>(i - 1)] += value;
    }
  }
  return u;
}

bool is_independent_increments(const IncrementLaw& q) {
  const auto u = increment_marginals(q);
  for (const auto& [d, value] : q.table()) {
    const auto x = gap_decode(d);
    Rational product = 1;
    for (int i = 2; i <= q.n(); ++i) {
      const auto& ui = u[static_cast<std::size_t>(i - 1)];
      product *= x.bit(i) == 1 ? ui : Rational(1 - ui);
    }
    if (product != value) return false;
  }
  return true;
}

namespace {

Rational random_positive_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 1000);
  Rational value(dist(rng), dist(rng));
  value.canonicalize();
  return value;
}

}  // namespace

PartitionLaw random_partially_exchangeable_law(int n, std::mt19937_64& rng,
                                                EnumerationLimits limits) {
  std::map<Composition, Rational> mass;
  Rational total = 0;
  for_each_set_partition(n, [&](const SetPartition& pi) {
    auto w = random_positive_rational(rng);
    total += w;
    mass[block_sizes(pi)] += w;
  }, limits);
  PartitionLaw::Table table;
  for (auto& [b, w] : mass) {
    table.emplace(b, w / (total * Rational(count_partitions_with_sizes(b))));
  }
  return PartitionLaw(n, std::move(table));
}

PartitionLaw random_exchangeable_law(int n, std::mt19937_64& rng) {
  std::map<std::vector<int>, Rational> weight;
  const auto compositions = all_compositions(n);
  Rational total = 0;
  for (const auto& b : compositions) {
    auto [it, inserted] = weight.try_emplace(sorted_parts(b));
    if (inserted) it->second = random_positive_rational(rng);
    total += it->second * Rational(count_partitions_with_sizes(b));
  }
  PartitionLaw::Table table;
  for (const auto& b : compositions) table.emplace(b, weight.at(sorted_parts(b)) / total);
  return PartitionLaw(n, std::move(table));
}

}  // namespace incpart
