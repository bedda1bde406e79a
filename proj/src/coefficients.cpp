#include "incpart/coefficients.hpp"

#include <algorithm>
#include <stdexcept>

#include "incpart/errors.hpp"

namespace incpart {

namespace {

struct MatrixSearch {
  const std::vector<int>& column_sums;
  std::vector<int> row_budget;
  ConstrainedMatrix matrix;
  const std::function<void(const ConstrainedMatrix&)>& visit;

  // Places entries of column `col` from row `row` downwards with `left` still
  // to distribute in that column.
  void fill(int col, int row, int left) {
    const int k = matrix.k();
    if (col == k) {
      if (std::all_of(row_budget.begin(), row_budget.end(), [](int b) { return b == 0; })) {
        visit(matrix);
      }
      return;
    }
    auto& budget = row_budget[static_cast<std::size_t>(row)];
    if (row == col) {
      // Diagonal entry absorbs the rest of the column.
      if (left > budget) return;
      matrix.at(row, col) = left;
      budget -= left;
      int next_col = col + 1;
      fill(next_col, 0, next_col < k ? column_sums[static_cast<std::size_t>(next_col)] : 0);
      budget += left;
      matrix.at(row, col) = 0;
      return;
    }
    const int top = std::min(left, budget);
    for (int value = top; value >= 0; --value) {
      matrix.at(row, col) = value;
      budget -= value;
      fill(col, row + 1, left - value);
      budget += value;
    }
    matrix.at(row, col) = 0;
  }
};

}  // namespace

void for_each_constrained_matrix(const Composition& b, const Composition& d,
                                 const std::function<void(const ConstrainedMatrix&)>& visit) {
  require_same_shape(b, d);
  const int k = b.k();
  std::vector<int> column_sums;
  std::vector<int> row_sums;
  for (int i = 0; i < k; ++i) {
    column_sums.push_back(d[static_cast<std::size_t>(i)] - 1);
    row_sums.push_back(b[static_cast<std::size_t>(i)] - 1);
  }
  MatrixSearch search{column_sums, row_sums, ConstrainedMatrix(k), visit};
  search.fill(0, 0, column_sums[0]);
}

std::vector<ConstrainedMatrix> enumerate_constrained_matrices(const Composition& b,
                                                              const Composition& d) {
  std::vector<ConstrainedMatrix> out;
  for_each_constrained_matrix(b, d, [&](const ConstrainedMatrix& m) { out.push_back(m); });
  return out;
}

BigInt r_via_formula(const Composition& d, const Composition& b) {
  require_same_shape(d, b);
  const int k = d.k();
  std::vector<BigInt> fact(static_cast<std::size_t>(d.n()) + 1);
  for (unsigned i = 0; i < fact.size(); ++i) fact[i] = factorial(i);

  BigInt numerator = 1;
  for (int part : d.parts()) numerator *= fact[static_cast<std::size_t>(part - 1)];

  BigInt total = 0;
  for_each_constrained_matrix(b, d, [&](const ConstrainedMatrix& m) {
    BigInt denominator = 1;
    for (int i = 0; i < k; ++i) {
      for (int j = i; j < k; ++j) denominator *= fact[static_cast<std::size_t>(m.at(i, j))];
    }
    // Each column contributes a multinomial coefficient, so the quotient is exact.
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
      throw std::logic_error("non-integral summand in r(" + to_string(d) + ";" + to_string(b) +
                             ")");
    }
    BigInt term;
    mpz_divexact(term.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    total += term;
  });
  return total;
}

BigInt r_via_bruteforce(const Composition& d, const Composition& b, EnumerationLimits limits) {
  require_same_shape(d, b);
  BigInt count = 0;
  for_each_set_partition(
      d.n(),
      [&](const SetPartition& p) {
        if (p.num_blocks() == b.k() && block_sizes(p) == b && gap_encode(increments(p)) == d) {
          ++count;
        }
      },
      limits);
  return count;
}

CompositionPolynomial::CompositionPolynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1) throw DomainError("polynomial needs at least one variable");
}

CompositionPolynomial CompositionPolynomial::one(int num_vars) {
  CompositionPolynomial p(num_vars);
  p.add_term(std::vector<int>(static_cast<std::size_t>(num_vars), 0), 1);
  return p;
}

BigInt CompositionPolynomial::coefficient(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt CompositionPolynomial::coefficient_for(const Composition& b) const {
  if (b.k() != num_vars_) throw DomainError("composition length does not match variable count");
  std::vector<int> exponents;
  exponents.reserve(b.parts().size());
  for (int part : b.parts()) exponents.push_back(part - 1);
  return coefficient(exponents);
}

BigInt CompositionPolynomial::evaluate_at_ones() const {
  BigInt sum = 0;
  for (const auto& [exponents, c] : terms_) sum += c;
  return sum;
}

void CompositionPolynomial::add_term(std::vector<int> exponents, const BigInt& coefficient) {
  if (static_cast<int>(exponents.size()) != num_vars_) {
    throw DomainError("exponent vector length does not match variable count");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exponents), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

void CompositionPolynomial::multiply_by_prefix_sum(int m) {
  if (m < 1 || m > num_vars_) throw DomainError("prefix length out of range");
  std::map<std::vector<int>, BigInt> product;
  for (const auto& [exponents, c] : terms_) {
    for (int v = 0; v < m; ++v) {
      auto shifted = exponents;
      ++shifted[static_cast<std::size_t>(v)];
      product[std::move(shifted)] += c;
    }
  }
  // add_term admits negative coefficients, so products can cancel.
  std::erase_if(product, [](const auto& entry) { return entry.second == 0; });
  terms_ = std::move(product);
}

CompositionPolynomial genfun_expand(const Composition& d) {
  auto poly = CompositionPolynomial::one(d.k());
  for (int j = 0; j < d.k(); ++j) {
    for (int power = 1; power < d[static_cast<std::size_t>(j)]; ++power) {
      poly.multiply_by_prefix_sum(j + 1);
    }
  }
  return poly;
}

std::optional<CoefficientMethod> parse_coefficient_method(std::string_view name) {
  if (name == "formula") return CoefficientMethod::formula;
  if (name == "bruteforce") return CoefficientMethod::bruteforce;
  if (name == "genfun") return CoefficientMethod::genfun;
  return std::nullopt;
}

std::string_view name_of(CoefficientMethod method) {
  switch (method) {
    case CoefficientMethod::formula:
      return "formula";
    case CoefficientMethod::bruteforce:
      return "bruteforce";
    case CoefficientMethod::genfun:
      return "genfun";
  }
  return "unknown";
}

RTable::RTable(int n, int k, CoefficientMethod method, EnumerationLimits limits)
    : n_(n), k_(k), order_(enumerate_compositions(n, k)) {
  const std::size_t size = order_.size();
  for (std::size_t i = 0; i < size; ++i) index_.emplace(order_[i], i);
  values_.assign(size * size, BigInt(0));

  switch (method) {
    case CoefficientMethod::formula:
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          values_[i * size + j] = r_via_formula(order_[i], order_[j]);
        }
      }
      break;
    case CoefficientMethod::genfun:
      for (std::size_t i = 0; i < size; ++i) {
        auto poly = genfun_expand(order_[i]);
        for (std::size_t j = 0; j < size; ++j) {
          values_[i * size + j] = poly.coefficient_for(order_[j]);
        }
      }
      break;
    case CoefficientMethod::bruteforce:
      // One pass over all partitions fills the whole table.
      for_each_set_partition(
          n,
          [&](const SetPartition& p) {
            if (p.num_blocks() != k) return;
            auto d = index_.at(gap_encode(increments(p)));
            auto b = index_.at(block_sizes(p));
            ++values_[d * size + b];
          },
          limits);
      break;
  }
}

std::size_t RTable::index_of(const Composition& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) {
    throw DomainError("composition " + to_string(c) + " is not in S_{" + std::to_string(n_) +
                      "," + std::to_string(k_) + "}");
  }
  return it->second;
}

const BigInt& RTable::r(const Composition& d, const Composition& b) const {
  return at(index_of(d), index_of(b));
}

}  // namespace incpart
