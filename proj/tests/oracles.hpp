#pragma once

// Brute-force references used by the tests. Nothing here calls into the
// library's enumeration or coefficient code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

/// Bell numbers from the Bell triangle.
inline std::uint64_t bell(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.back();
}

inline std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Every k-tuple over {1..n} that sums to n, sorted lexicographically descending.
inline std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> tuple(static_cast<std::size_t>(k), 1);
  while (true) {
    int sum = 0;
    for (int v : tuple) sum += v;
    if (sum == n) out.push_back(tuple);
    std::size_t i = 0;
    while (i < tuple.size() && tuple[i] == n) tuple[i++] = 1;
    if (i == tuple.size()) break;
    ++tuple[i];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// All partitions of {1..n} by inserting each element into an existing block
/// or a new one; blocks are kept in order of their smallest element.
inline std::vector<Blocks> set_partitions(int n) {
  std::vector<Blocks> out;
  Blocks current;
  std::function<void(int)> place = [&](int element) {
    if (element > n) {
      out.push_back(current);
      return;
    }
    // Index loop: the recursion may reallocate `current`.
    for (std::size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(element);
      place(element + 1);
      current[b].pop_back();
    }
    current.push_back({element});
    place(element + 1);
    current.pop_back();
  };
  place(1);
  return out;
}

inline std::vector<int> sizes(const Blocks& blocks) {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(static_cast<int>(b.size()));
  return out;
}

/// Distances between successive block minima, closing with n + 1 - a_k.
inline std::vector<int> gaps(const Blocks& blocks, int n) {
  std::vector<int> minima;
  for (const auto& b : blocks) minima.push_back(*std::min_element(b.begin(), b.end()));
  std::sort(minima.begin(), minima.end());
  std::vector<int> out;
  for (std::size_t i = 1; i < minima.size(); ++i) out.push_back(minima[i] - minima[i - 1]);
  out.push_back(n + 1 - minima.back());
  return out;
}

inline std::vector<int> increment_bits(const Blocks& blocks, int n) {
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  for (const auto& b : blocks) bits[static_cast<std::size_t>(*std::min_element(b.begin(), b.end()) - 1)] = 1;
  return bits;
}

}  // namespace oracle
