#include "incpart/models.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace incpart {

CrpParameter CrpParameter::finite(Rational theta) {
  if (theta <= 0) throw DomainError("CRP parameter must be positive, got " + to_string(theta));
  return CrpParameter(Kind::finite, std::move(theta));
}

CrpParameter CrpParameter::parse(std::string_view text) {
  if (text == "zero" || text == "0") return zero();
  if (text == "inf" || text == "infinity") return infinity();
  return finite(parse_rational(text));
}

std::string to_string(const CrpParameter& theta) {
  switch (theta.kind()) {
    case CrpParameter::Kind::zero:
      return "zero";
    case CrpParameter::Kind::infinity:
      return "inf";
    case CrpParameter::Kind::finite:
      break;
  }
  const auto& v = theta.value();
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

TwoParameter::TwoParameter(Rational alpha, Rational theta)
    : alpha_(std::move(alpha)), theta_(std::move(theta)) {
  if (alpha_ < 0 || alpha_ >= 1) {
    throw DomainError("two-parameter model requires 0 <= alpha < 1, got " + to_string(alpha_));
  }
  if (theta_ <= -alpha_) {
    throw DomainError("two-parameter model requires theta > -alpha, got theta=" +
                      to_string(theta_));
  }
}

PartitionLaw crp_law(int n, const CrpParameter& theta) {
  if (n < 1) throw DomainError("crp_law requires n >= 1");
  PartitionLaw::Table table;
  const auto compositions = all_compositions(n);
  if (!theta.is_finite()) {
    for (const auto& b : compositions) {
      bool atom = theta.kind() == CrpParameter::Kind::zero ? b.k() == 1 : b.k() == n;
      table.emplace(b, atom ? 1 : 0);
    }
    return PartitionLaw(n, std::move(table));
  }
  const Rational& t = theta.value();
  Rational rising = 1;
  for (int i = 0; i < n; ++i) rising *= t + i;
  for (const auto& b : compositions) {
    Rational value = pow(t, static_cast<unsigned>(b.k()));
    for (int part : b.parts()) value *= Rational(factorial(static_cast<unsigned>(part - 1)));
    table.emplace(b, value / rising);
  }
  return PartitionLaw(n, std::move(table));
}

std::vector<Rational> crp_increment_probs(int n, const CrpParameter& theta) {
  if (n < 1) throw DomainError("crp_increment_probs requires n >= 1");
  std::vector<Rational> u;
  u.reserve(static_cast<std::size_t>(n));
  u.emplace_back(1);
  for (int i = 2; i <= n; ++i) {
    switch (theta.kind()) {
      case CrpParameter::Kind::zero:
        u.emplace_back(0);
        break;
      case CrpParameter::Kind::infinity:
        u.emplace_back(1);
        break;
      case CrpParameter::Kind::finite:
        u.emplace_back(theta.value() / (theta.value() + (i - 1)));
        break;
    }
  }
  return u;
}

Rational two_parameter_transition(int i, int k, const TwoParameter& params) {
  if (k < 1 || k > i) {
    throw DomainError("two_parameter_transition requires 1 <= k <= i (i=" + std::to_string(i) +
                      ", k=" + std::to_string(k) + ")");
  }
  return (params.alpha() * k + params.theta()) / (params.theta() + i);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53 high bits; identical on every platform, unlike uniform_real_distribution.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Sequential seating: element i+1 opens a block with weight k*alpha + theta,
// joins block j with weight |block j| - alpha; weights total i + theta.
SetPartition seat(int n, double alpha, double theta, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> assignment{1};
  std::vector<int> sizes{1};
  assignment.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    const double k = static_cast<double>(sizes.size());
    double x = uniform01(rng) * (i + theta);
    const double open = k * alpha + theta;
    if (x < open) {
      sizes.push_back(1);
      assignment.push_back(static_cast<int>(sizes.size()));
      continue;
    }
    x -= open;
    std::size_t chosen = sizes.size() - 1;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
      const double w = sizes[j] - alpha;
      if (x < w) {
        chosen = j;
        break;
      }
      x -= w;
    }
    ++sizes[chosen];
    assignment.push_back(static_cast<int>(chosen) + 1);
  }
  return SetPartition(std::move(assignment));
}

}  // namespace

SetPartition sample_crp(int n, const CrpParameter& theta, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_crp requires n >= 1");
  switch (theta.kind()) {
    case CrpParameter::Kind::zero:
      return SetPartition(std::vector<int>(static_cast<std::size_t>(n), 1));
    case CrpParameter::Kind::infinity: {
      std::vector<int> singletons(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) singletons[static_cast<std::size_t>(i)] = i + 1;
      return SetPartition(std::move(singletons));
    }
    case CrpParameter::Kind::finite:
      break;
  }
  return seat(n, 0.0, theta.value().get_d(), seed);
}

SetPartition sample_two_parameter(int n, const TwoParameter& params, std::uint64_t seed) {
  if (n < 1) throw DomainError("sample_two_parameter requires n >= 1");
  return seat(n, params.alpha().get_d(), params.theta().get_d(), seed);
}

std::vector<SetPartition> sample_crp_many(int n, const CrpParameter& theta, std::size_t count,
                                          std::uint64_t seed) {
  std::vector<SetPartition> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(sample_crp(n, theta, derive_seed(seed, j)));
  return out;
}

std::vector<SetPartition> sample_two_parameter_many(int n, const TwoParameter& params,
                                                    std::size_t count, std::uint64_t seed) {
  std::vector<SetPartition> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    out.push_back(sample_two_parameter(n, params, derive_seed(seed, j)));
  }
  return out;
}

bool FrequencyCheck::within(double sigmas) const { return std::abs(z) <= sigmas; }

namespace {

FrequencyCheck make_check(std::string label, std::uint64_t hits, std::uint64_t trials,
                          double expected) {
  FrequencyCheck check{std::move(label), hits, trials, expected};
  check.empirical = trials ? static_cast<double>(hits) / static_cast<double>(trials) : 0.0;
  check.standard_error =
      trials ? std::sqrt(expected * (1.0 - expected) / static_cast<double>(trials)) : 0.0;
  const double diff = check.empirical - expected;
  if (check.standard_error > 0) {
    check.z = diff / check.standard_error;
  } else {
    check.z = diff == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return check;
}

}  // namespace

std::vector<FrequencyCheck> composition_frequency_check(const std::vector<SetPartition>& samples,
                                                        const PartitionLaw& exact) {
  std::map<Composition, std::uint64_t> hits;
  for (const auto& s : samples) {
    if (s.n() != exact.n()) throw DomainError("sample size does not match the law's n");
    ++hits[block_sizes(s)];
  }
  std::vector<FrequencyCheck> out;
  for (const auto& b : all_compositions(exact.n())) {
    const Rational p = exact.at(b) * Rational(count_partitions_with_sizes(b));
    auto it = hits.find(b);
    out.push_back(make_check(to_string(b), it == hits.end() ? 0 : it->second, samples.size(),
                             p.get_d()));
  }
  return out;
}

std::vector<FrequencyCheck> transition_frequency_check(const std::vector<SetPartition>& samples,
                                                       const TwoParameter& params) {
  // (i, k) -> (opened, reached)
  std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>> cells;
  for (const auto& s : samples) {
    const auto x = increments(s);
    int blocks = 0;
    for (int i = 1; i < s.n(); ++i) {
      blocks += x.bit(i);
      auto& cell = cells[{i, blocks}];
      ++cell.second;
      cell.first += static_cast<std::uint64_t>(x.bit(i + 1));
    }
  }
  std::vector<FrequencyCheck> out;
  for (const auto& [key, cell] : cells) {
    const auto [i, k] = key;
    const double expected = two_parameter_transition(i, k, params).get_d();
    out.push_back(make_check("P(X" + std::to_string(i + 1) + "=1|S" + std::to_string(i) + "=" +
                                 std::to_string(k) + ")",
                             cell.first, cell.second, expected));
  }
  return out;
}

namespace {

Composition ones_with_two_at(int n, std::size_t position) {
  std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
  parts[position] = 2;
  return Composition(std::move(parts));
}

}  // namespace

ProofIdentities check_proof_identities(const IncrementLaw& q, const PartitionLaw& p) {
  const int n = q.n();
  if (n < 2 || p.n() != n) throw DomainError("proof identities need matching n >= 2");
  // Gap encodings of 1,0,1,...,1 and 1,1,...,1,0.
  const auto early_zero = ones_with_two_at(n, 0);
  const auto late_zero = ones_with_two_at(n, static_cast<std::size_t>(n - 2));
  const auto& pair_first = p.at(early_zero);
  ProofIdentities result;
  result.second_bit_zero = q.at(early_zero) == pair_first;
  result.last_bit_zero = q.at(late_zero) == pair_first * (n - 1);
  return result;
}

Theorem2Report verify_theorem2(const IncrementLaw& q, const PartitionLaw& p) {
  const int n = q.n();
  if (p.n() != n) throw NotApplicableError("laws are defined on different n");
  if (n < 2) throw NotApplicableError("theta is not identifiable for n < 2");
  auto inverse = invert_map(q);
  if (!inverse.feasible) {
    throw NotApplicableError("increment law is not realizable: " + inverse.reason);
  }
  if (inverse.law != p) throw NotApplicableError("partition law is not the inverse image of q");
  if (!is_exchangeable(p)) throw NotApplicableError("partition law is not exchangeable");
  if (!is_independent_increments(q)) {
    throw NotApplicableError("increments are not independent");
  }

  const auto u = increment_marginals(q);
  Theorem2Report report;
  report.u2 = u[1];
  if (report.u2 == 1) {
    report.theta = CrpParameter::infinity();
  } else if (report.u2 == 0) {
    report.theta = CrpParameter::zero();
  } else {
    report.theta = CrpParameter::finite(report.u2 / (1 - report.u2));
    // (n-1)(1-u_2)/u_2 = (1-u_n)/u_n, checked at every i.
    for (int i = 3; i <= n; ++i) {
      const auto& ui = u[static_cast<std::size_t>(i - 1)];
      if (ui == 0 || Rational((1 - report.u2) / report.u2 * (i - 1)) != (1 - ui) / ui) {
        report.failures.push_back("marginal u_" + std::to_string(i) + " = " + to_string(ui) +
                                  " breaks the CRP ratio identity");
      }
    }
  }
  const auto identities = check_proof_identities(q, p);
  if (!identities.second_bit_zero) report.failures.push_back("q(1,0,1,...,1) != p(2,1,...,1)");
  if (!identities.last_bit_zero) {
    report.failures.push_back("q(1,...,1,0) != (n-1) p(2,1,...,1)");
  }
  const auto expected = forward_map(crp_law(n, report.theta));
  for (const auto& [d, value] : q.table()) {
    if (expected.at(d) != value) {
      report.failures.push_back("q" + to_string(d) + " = " + to_string(value) + " but CRP(" +
                                to_string(report.theta) + ") gives " + to_string(expected.at(d)));
    }
  }
  report.verified = report.failures.empty();
  return report;
}

}  // namespace incpart
