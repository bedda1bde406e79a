#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "incpart/composition.hpp"
#include "incpart/errors.hpp"
#include "incpart/set_partition.hpp"
#include "oracles.hpp"

using namespace incpart;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<Composition>& list) {
  std::vector<std::vector<int>> out;
  for (const auto& c : list) out.push_back(c.parts());
  return out;
}

}  // namespace

TEST_CASE("composition invariants") {
  Composition c{3, 1, 2, 2};
  CHECK(c.n() == 8);
  CHECK(c.k() == 4);
  CHECK_THROWS_AS(Composition({}), DomainError);
  CHECK_THROWS_AS(Composition({2, 0, 1}), DomainError);
  CHECK_THROWS_AS(Composition({-1, 3}), DomainError);
}

TEST_CASE("enumerate_compositions examples") {
  CHECK(parts_of(enumerate_compositions(3, 2)) == std::vector<std::vector<int>>{{2, 1}, {1, 2}});
  CHECK(parts_of(enumerate_compositions(4, 2)) ==
        std::vector<std::vector<int>>{{3, 1}, {2, 2}, {1, 3}});
  CHECK(parts_of(enumerate_compositions(1, 1)) == std::vector<std::vector<int>>{{1}});
  CHECK_THROWS_AS(enumerate_compositions(3, 4), DomainError);
  CHECK_THROWS_AS(enumerate_compositions(3, 0), DomainError);
}

TEST_CASE("enumerate_compositions matches tuple enumeration for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(parts_of(enumerate_compositions(n, k)) == oracle::compositions(n, k));
    }
  }
}

TEST_CASE("composition counts are binomial and total 2^(n-1) for n <= 10") {
  for (int n = 1; n <= 10; ++n) {
    std::size_t total = 0;
    for (int k = 1; k <= n; ++k) {
      auto list = enumerate_compositions(n, k);
      CHECK(list.size() == oracle::choose(n - 1, k - 1));
      std::set<Composition> unique(list.begin(), list.end());
      CHECK(unique.size() == list.size());
      for (std::size_t i = 1; i < list.size(); ++i) CHECK(dict_order_greater(list[i - 1], list[i]));
      total += list.size();
    }
    CHECK(total == (std::size_t{1} << (n - 1)));
    CHECK(all_compositions(n).size() == total);
  }
}

TEST_CASE("set partition stream counts Bell numbers") {
  auto count = [](int n) {
    std::uint64_t c = 0;
    for_each_set_partition(n, [&](const SetPartition&) { ++c; });
    return c;
  };
  CHECK(count(1) == 1);
  CHECK(count(3) == 5);
  CHECK(count(8) == 4140);
  for (int n = 1; n <= 9; ++n) CHECK(count(n) == oracle::bell(n));
}

TEST_CASE("set partition stream agrees with insertion enumeration") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<std::vector<int>>> streamed;
    for_each_set_partition(n, [&](const SetPartition& p) { streamed.insert(p.blocks()); });
    std::set<std::vector<std::vector<int>>> expected;
    for (const auto& blocks : oracle::set_partitions(n)) expected.insert(blocks);
    CHECK(streamed == expected);
  }
}

TEST_CASE("set partition stream respects the cap") {
  CHECK_THROWS_AS(SetPartitionStream(13), DomainError);
  CHECK_NOTHROW(SetPartitionStream(13, EnumerationLimits{13}));
  CHECK_THROWS_AS(SetPartitionStream(0), DomainError);
  auto stream = enumerate_set_partitions(2);
  CHECK(stream.next().has_value());
  CHECK(stream.next().has_value());
  CHECK_FALSE(stream.next().has_value());
  CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("restricted-growth validation") {
  CHECK_NOTHROW(SetPartition({1, 2, 1, 3}));
  CHECK_THROWS_AS(SetPartition({2, 1}), DomainError);
  CHECK_THROWS_AS(SetPartition({1, 3}), DomainError);
  CHECK_THROWS_AS(SetPartition::from_blocks({{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(SetPartition::from_blocks({{1, 4}}), DomainError);
  auto p = SetPartition::from_blocks({{2}, {4, 1, 3}});
  CHECK(p.assignment() == std::vector<int>{1, 2, 1, 1});
  CHECK(to_string(p) == "{1,3,4}{2}");
  CHECK(to_rgs_string(p) == "1 2 1 1");
}

TEST_CASE("block_sizes examples") {
  CHECK(block_sizes(SetPartition::from_blocks({{1, 3, 4}, {2}})) == Composition{3, 1});
  CHECK(block_sizes(SetPartition::from_blocks({{1, 3}, {2, 4}})) == Composition{2, 2});
  CHECK(block_sizes(SetPartition({1, 2, 3, 4, 5})) == Composition{1, 1, 1, 1, 1});
}

TEST_CASE("increments examples") {
  const IncrementSequence expected({1, 1, 0, 0});
  CHECK(increments(SetPartition::from_blocks({{1, 3, 4}, {2}})) == expected);
  CHECK(increments(SetPartition::from_blocks({{1, 3}, {2, 4}})) == expected);
  CHECK(increments(SetPartition({1, 1, 1, 1, 1})) == IncrementSequence({1, 0, 0, 0, 0}));
}

TEST_CASE("increment sequences must start with one") {
  CHECK_THROWS_AS(IncrementSequence({0, 1}), InvalidSequenceError);
  CHECK_THROWS_AS(IncrementSequence({1, 2}), InvalidSequenceError);
  CHECK_THROWS_AS(IncrementSequence({}), InvalidSequenceError);
}

TEST_CASE("gap_encode and gap_decode examples") {
  CHECK(gap_encode(IncrementSequence({1, 0, 0, 1, 1, 0, 1, 0})) == Composition{3, 1, 2, 2});
  CHECK(gap_decode(Composition{3, 1, 2, 2}) == IncrementSequence({1, 0, 0, 1, 1, 0, 1, 0}));
  CHECK(gap_encode(IncrementSequence({1, 1, 1, 1})) == Composition{1, 1, 1, 1});
  CHECK(gap_encode(IncrementSequence({1, 0, 0, 0, 0})) == Composition{5});
  CHECK(gap_decode(Composition{5}) == IncrementSequence({1, 0, 0, 0, 0}));
  CHECK(gap_encode(IncrementSequence({1})) == Composition{1});
}

TEST_CASE("gap encoding is a bijection on all sequences of length 8") {
  std::set<Composition> seen;
  for (unsigned mask = 0; mask < (1u << 7); ++mask) {
    std::vector<int> bits{1};
    for (int i = 0; i < 7; ++i) bits.push_back((mask >> i) & 1u);
    IncrementSequence x(bits);
    auto d = gap_encode(x);
    CHECK(d.n() == 8);
    CHECK(d.k() == x.ones());
    CHECK(gap_decode(d) == x);
    seen.insert(d);
  }
  CHECK(seen.size() == 128);
  for (const auto& d : all_compositions(8)) CHECK(gap_encode(gap_decode(d)) == d);
}

TEST_CASE("partial_order_geq and dict_order_greater examples") {
  CHECK(partial_order_geq({3, 1}, {2, 2}));
  CHECK_FALSE(partial_order_geq({2, 2}, {3, 1}));
  CHECK(partial_order_geq({2, 2}, {2, 2}));
  CHECK(dict_order_greater({2, 1}, {1, 2}));
  CHECK_FALSE(dict_order_greater({1, 2}, {1, 2}));
  CHECK_THROWS_AS(dict_order_greater({2, 2}, {2, 1}), DomainError);
  CHECK_THROWS_AS(partial_order_geq({2, 2}, {1, 1, 2}), DomainError);
}

TEST_CASE("order relations on S_{n,k}: partial order is a partial order refined by dictionary order") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto s = enumerate_compositions(n, k);
      for (const auto& y : s) {
        CHECK(partial_order_geq(y, y));
        for (const auto& z : s) {
          const bool geq = partial_order_geq(y, z);
          if (geq && y != z) CHECK(dict_order_greater(y, z));
          if (geq && partial_order_geq(z, y)) CHECK(y == z);
          if (y != z) CHECK(dict_order_greater(y, z) != dict_order_greater(z, y));
        }
      }
      if (n <= 6) {
        for (const auto& x : s) {
          for (const auto& y : s) {
            for (const auto& z : s) {
              if (partial_order_geq(x, y) && partial_order_geq(y, z)) CHECK(partial_order_geq(x, z));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("count_partitions_with_sizes") {
  CHECK(count_partitions_with_sizes({5}) == 1);
  CHECK(count_partitions_with_sizes({2, 1}) == 2);
  CHECK(count_partitions_with_sizes({1, 2}) == 1);
  for (int n = 1; n <= 8; ++n) {
    std::map<std::vector<int>, std::uint64_t> brute;
    for (const auto& blocks : oracle::set_partitions(n)) ++brute[oracle::sizes(blocks)];
    BigInt total = 0;
    for (const auto& b : all_compositions(n)) {
      CAPTURE(to_string(b));
      CHECK(count_partitions_with_sizes(b) == brute[b.parts()]);
      total += count_partitions_with_sizes(b);
    }
    CHECK(total == oracle::bell(n));
  }
}

TEST_CASE("B(Pi) dominates D(Pi) for every partition with n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for_each_set_partition(n, [&](const SetPartition& p) {
      CHECK(partial_order_geq(block_sizes(p), gap_encode(increments(p))));
    });
  }
}

TEST_CASE("n = 1 goes through every operation") {
  auto only = enumerate_compositions(1, 1);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == Composition{1});
  auto stream = enumerate_set_partitions(1);
  auto p = stream.next();
  REQUIRE(p);
  CHECK_FALSE(stream.next());
  CHECK(block_sizes(*p) == Composition{1});
  CHECK(increments(*p) == IncrementSequence({1}));
  CHECK(gap_encode(increments(*p)) == Composition{1});
  CHECK(count_partitions_with_sizes({1}) == 1);
  CHECK(partial_order_geq({1}, {1}));
}
