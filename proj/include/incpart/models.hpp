#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "incpart/laws.hpp"
#include "incpart/rational.hpp"
#include "incpart/set_partition.hpp"

namespace incpart {

/// CRP parameter: a positive rational, or one of the two limit cases.
class CrpParameter {
 public:
  enum class Kind { finite, zero, infinity };

  /// Throws DomainError unless theta > 0.
  static CrpParameter finite(Rational theta);
  static CrpParameter zero() { return CrpParameter(Kind::zero, 0); }
  static CrpParameter infinity() { return CrpParameter(Kind::infinity, 0); }

  /// "zero", "inf", or a positive rational such as "3/2" or "2".
  static CrpParameter parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  /// Only meaningful for the finite kind.
  const Rational& value() const { return value_; }

  friend bool operator==(const CrpParameter&, const CrpParameter&) = default;

 private:
  CrpParameter(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}

  Kind kind_;
  Rational value_;
};

std::string to_string(const CrpParameter& theta);

/// Two-parameter family with 0 <= alpha < 1 and theta > -alpha.
class TwoParameter {
 public:
  /// Throws DomainError outside the parameter range.
  TwoParameter(Rational alpha, Rational theta);

  const Rational& alpha() const { return alpha_; }
  const Rational& theta() const { return theta_; }

 private:
  Rational alpha_;
  Rational theta_;
};

/// p(n_1..n_k) = theta^k prod (n_i - 1)! / prod_{i<n} (theta + i); the limit
/// cases put all mass on (n) for zero and on (1,...,1) for infinity.
PartitionLaw crp_law(int n, const CrpParameter& theta);

/// u_1 = 1, u_i = theta / (i - 1 + theta).
std::vector<Rational> crp_increment_probs(int n, const CrpParameter& theta);

/// P(X_{i+1} = 1 | S_i = k) = (k alpha + theta) / (i + theta).
/// Throws DomainError unless 1 <= k <= i.
Rational two_parameter_transition(int i, int k, const TwoParameter& params);

/// Seed for the sample at `index` of a run seeded with `seed` (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// One seeded draw: element i opens a new block w.p. theta / (i - 1 + theta)
/// and otherwise joins a block with probability proportional to its size.
SetPartition sample_crp(int n, const CrpParameter& theta, std::uint64_t seed);
/// Same seating process with new-block weight k alpha + theta and join weight
/// |block| - alpha. With alpha = 0 it consumes randomness exactly as sample_crp.
SetPartition sample_two_parameter(int n, const TwoParameter& params, std::uint64_t seed);

/// `count` samples; sample j is drawn with derive_seed(seed, j).
std::vector<SetPartition> sample_crp_many(int n, const CrpParameter& theta, std::size_t count,
                                          std::uint64_t seed);
std::vector<SetPartition> sample_two_parameter_many(int n, const TwoParameter& params,
                                                    std::size_t count, std::uint64_t seed);

/// Empirical frequency of an event against its exact probability.
struct FrequencyCheck {
  std::string label;
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
  double expected = 0.0;
  double empirical = 0.0;
  double standard_error = 0.0;
  double z = 0.0;

  bool within(double sigmas) const;
};

/// One check per composition b of n: frequency of B(Π) = b against p(b) * count(b).
std::vector<FrequencyCheck> composition_frequency_check(const std::vector<SetPartition>& samples,
                                                        const PartitionLaw& exact);

/// One check per (i, k) reached by the samples: frequency of X_{i+1} = 1
/// among samples with S_i = k against the two-parameter transition.
std::vector<FrequencyCheck> transition_frequency_check(const std::vector<SetPartition>& samples,
                                                       const TwoParameter& params);

struct ProofIdentities {
  /// q(1,0,1,...,1) == p(2,1,...,1)
  bool second_bit_zero = false;
  /// q(1,1,...,1,0) == (n-1) p(2,1,...,1)
  bool last_bit_zero = false;
};

/// Requires n >= 2. The second identity needs p to be exchangeable.
ProofIdentities check_proof_identities(const IncrementLaw& q, const PartitionLaw& p);

struct Theorem2Report {
  bool verified = false;
  CrpParameter theta = CrpParameter::zero();
  Rational u2;
  std::vector<std::string> failures;
};

/// Recovers the CRP parameter from an exchangeable law with independent
/// increments: theta = u_2 / (1 - u_2), or a limit case when u_2 is 0 or 1,
/// then checks q against the CRP increment law exactly.
/// Throws NotApplicableError naming the first unmet hypothesis.
Theorem2Report verify_theorem2(const IncrementLaw& q, const PartitionLaw& p);

}  // namespace incpart
