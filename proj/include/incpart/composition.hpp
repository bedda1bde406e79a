#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "incpart/rational.hpp"

namespace incpart {

/// An ordered tuple of positive integers. Used both for ordered block sizes
/// B(Π) and for gap encodings D(Π) of increment sequences.
class Composition {
 public:
  /// Throws DomainError if empty or any part is < 1.
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Lexicographic on parts. Within one S_{n,k} this is the dictionary order.
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// "(3,1,2)"
std::string to_string(const Composition& c);

/// Binary sequence (X_1, ..., X_n) with X_1 = 1.
class IncrementSequence {
 public:
  /// Throws InvalidSequenceError if empty, if bits[0] != 1 or a bit is not 0/1.
  explicit IncrementSequence(std::vector<int> bits);

  const std::vector<int>& bits() const { return bits_; }
  int n() const { return static_cast<int>(bits_.size()); }
  /// 1-based access, matching X_i.
  int bit(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }
  int ones() const;

  friend bool operator==(const IncrementSequence&, const IncrementSequence&) = default;

 private:
  std::vector<int> bits_;
};

std::string to_string(const IncrementSequence& x);

/// S_{n,k} in decreasing dictionary order. Throws DomainError unless 1 <= k <= n.
std::vector<Composition> enumerate_compositions(int n, int k);

/// All 2^(n-1) compositions of n, grouped by k = 1..n, each group decreasing.
std::vector<Composition> all_compositions(int n);

/// D = (a_2 - a_1, ..., n + 1 - a_k) where a_i are the positions of the ones.
Composition gap_encode(const IncrementSequence& x);
/// Inverse of gap_encode.
IncrementSequence gap_decode(const Composition& d);

/// Prefix-sum dominance y >= z. Throws DomainError unless both are in the same S_{n,k}.
bool partial_order_geq(const Composition& y, const Composition& z);
/// Strict dictionary order y >_d z on S_{n,k}. Same domain rule as above.
bool dict_order_greater(const Composition& y, const Composition& z);

/// Number of set partitions of [n] with ordered block sizes b:
/// prod_i C(n_i - 1, b_i - 1) with n_i = n - b_1 - ... - b_{i-1}.
BigInt count_partitions_with_sizes(const Composition& b);

/// Throws DomainError when y and z are not in the same S_{n,k}.
void require_same_shape(const Composition& y, const Composition& z);

}  // namespace incpart
