#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "incpart/gap_representation.hpp"
#include "incpart/models.hpp"

using namespace incpart;

namespace {

UnorderedSizeDistribution point(int n, SizeMultiset m) {
  return UnorderedSizeDistribution{n, {{std::move(m), Rational(1)}}};
}

}  // namespace

TEST_CASE("independent_binary_law") {
  const auto y = independent_binary_law({1, Rational(1, 2), Rational(1, 3)});
  CHECK(y.at({3}) == Rational(1, 3));
  CHECK(y.at({2, 1}) == Rational(1, 6));
  CHECK(y.at({1, 2}) == Rational(1, 3));
  CHECK(y.at({1, 1, 1}) == Rational(1, 6));
  CHECK_THROWS_AS(independent_binary_law({Rational(1, 2)}), DomainError);
  CHECK_THROWS_AS(independent_binary_law({1, 2}), DomainError);
}

TEST_CASE("gap_size_distribution examples") {
  CHECK(gap_size_distribution(independent_binary_law({1, 0, 0, 0})) == point(4, {4}));
  CHECK(gap_size_distribution(independent_binary_law({1, 1, 1, 1})) == point(4, {1, 1, 1, 1}));
  const auto dist = gap_size_distribution(independent_binary_law({1, Rational(1, 2), Rational(1, 3)}));
  CHECK(dist.table.size() == 3);
  CHECK(dist.table.at({3}) == Rational(1, 3));
  CHECK(dist.table.at({2, 1}) == Rational(1, 2));
  CHECK(dist.table.at({1, 1, 1}) == Rational(1, 6));
}

TEST_CASE("block_size_distribution examples") {
  const auto dist = block_size_distribution(crp_law(3, CrpParameter::finite(1)));
  CHECK(dist.table.at({3}) == Rational(1, 3));
  CHECK(dist.table.at({2, 1}) == Rational(1, 2));
  CHECK(dist.table.at({1, 1, 1}) == Rational(1, 6));
  CHECK(block_size_distribution(crp_law(5, CrpParameter::zero())) == point(5, {5}));
}

TEST_CASE("CRP gap sequence reproduces the block-size law and partial sums") {
  for (const Rational& t : {Rational(1, 2), Rational(1), Rational(2)}) {
    const auto theta = CrpParameter::finite(t);
    for (int n = 1; n <= 8; ++n) {
      const auto p = crp_law(n, theta);
      const auto y = independent_binary_law(crp_increment_probs(n, theta));
      const auto gaps = gap_size_distribution(y);
      CHECK(gaps == block_size_distribution(p));
      CHECK(gaps.total_mass() == 1);
      const auto report = verify_partial_sum_identity(p, y);
      CHECK(report.holds);
      CHECK(report.rows.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("partial-sum identity detects a different sequence law") {
  const auto p = crp_law(3, CrpParameter::finite(1));
  const auto y = independent_binary_law({1, Rational(1, 3), Rational(1, 3)});
  const auto report = verify_partial_sum_identity(p, y);
  CHECK_FALSE(report.holds);
  CHECK(report.first_mismatch == 2);
  CHECK(report.rows[0].equal);
  CHECK(report.rows[1].increments[1] == Rational(1, 2));
  CHECK(report.rows[1].sequence[1] == Rational(2, 3));
  CHECK_THROWS_AS(verify_partial_sum_identity(p, independent_binary_law({1, 0})), DomainError);
}

TEST_CASE("single block against the all-zero sequence") {
  const auto p = crp_law(6, CrpParameter::zero());
  CHECK(verify_partial_sum_identity(p, independent_binary_law({1, 0, 0, 0, 0, 0})).holds);
}

TEST_CASE("matching partial sums force matching marginals for independent sequences") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> num(0, 12);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> v{1};
    for (int i = 1; i < 6; ++i) v.emplace_back(num(rng), 12);
    for (auto& x : v) x.canonicalize();
    const auto y = independent_binary_law(v);
    CHECK(marginals_from_partial_sums(partial_sum_distributions(y)) == v);
  }
  const auto theta = CrpParameter::finite(Rational(2, 3));
  const auto q = forward_map(crp_law(7, theta));
  CHECK(marginals_from_partial_sums(partial_sum_distributions(q)) == crp_increment_probs(7, theta));
}

TEST_CASE("distributions conserve mass") {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 6; ++n) {
    CHECK(block_size_distribution(random_partially_exchangeable_law(n, rng)).total_mass() == 1);
  }
}
