#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "incpart/composition.hpp"
#include "incpart/rational.hpp"
#include "incpart/set_partition.hpp"

namespace incpart {

/// k x k upper-triangular matrix of non-negative integers whose i-th row
/// sums to b_i - 1 and i-th column sums to d_i - 1.
class ConstrainedMatrix {
 public:
  explicit ConstrainedMatrix(int k) : k_(k), entries_(static_cast<std::size_t>(k * k), 0) {}

  int k() const { return k_; }
  /// 0-based (row, column).
  int at(int i, int j) const { return entries_[index(i, j)]; }
  int& at(int i, int j) { return entries_[index(i, j)]; }

  friend bool operator==(const ConstrainedMatrix&, const ConstrainedMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * k_ + j); }

  int k_;
  std::vector<int> entries_;
};

/// Visits every matrix in the constraint set for (b, d) exactly once.
/// Columns are filled left to right; a row whose budget is exhausted is pruned.
/// Throws DomainError unless b and d are in the same S_{n,k}.
void for_each_constrained_matrix(const Composition& b, const Composition& d,
                                 const std::function<void(const ConstrainedMatrix&)>& visit);
std::vector<ConstrainedMatrix> enumerate_constrained_matrices(const Composition& b,
                                                              const Composition& d);

/// r(d; b) as the sum over constrained matrices M of
/// prod_i (d_i - 1)! / prod_{i,j} m_ij!.
BigInt r_via_formula(const Composition& d, const Composition& b);

/// r(d; b) by counting partitions of [n] with B = b and D = d.
BigInt r_via_bruteforce(const Composition& d, const Composition& b, EnumerationLimits limits = {});

/// Sparse polynomial in k variables with big-integer coefficients.
class CompositionPolynomial {
 public:
  explicit CompositionPolynomial(int num_vars);

  static CompositionPolynomial one(int num_vars);

  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, BigInt>& terms() const { return terms_; }

  /// Zero when absent.
  BigInt coefficient(const std::vector<int>& exponents) const;
  /// Coefficient of x_1^{b_1-1} ... x_k^{b_k-1}.
  BigInt coefficient_for(const Composition& b) const;
  BigInt evaluate_at_ones() const;

  void add_term(std::vector<int> exponents, const BigInt& coefficient);
  /// this *= (x_1 + ... + x_m)
  void multiply_by_prefix_sum(int m);

 private:
  int num_vars_;
  std::map<std::vector<int>, BigInt> terms_;
};

/// x_1^{d_1-1} (x_1+x_2)^{d_2-1} ... (x_1+...+x_k)^{d_k-1}, expanded.
CompositionPolynomial genfun_expand(const Composition& d);

enum class CoefficientMethod { formula, bruteforce, genfun };

std::optional<CoefficientMethod> parse_coefficient_method(std::string_view name);
std::string_view name_of(CoefficientMethod method);

/// All r(d; b) for d, b in S_{n,k}, both indexed by position in the
/// decreasing dictionary order of enumerate_compositions(n, k).
class RTable {
 public:
  RTable(int n, int k, CoefficientMethod method, EnumerationLimits limits = {});

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Composition>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  /// r(order[d_index]; order[b_index])
  const BigInt& at(std::size_t d_index, std::size_t b_index) const {
    return values_[d_index * order_.size() + b_index];
  }
  const BigInt& r(const Composition& d, const Composition& b) const;
  std::size_t index_of(const Composition& c) const;

 private:
  int n_;
  int k_;
  std::vector<Composition> order_;
  std::map<Composition, std::size_t> index_;
  std::vector<BigInt> values_;
};

}  // namespace incpart
