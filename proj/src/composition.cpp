#include "incpart/composition.hpp"

#include <numeric>

#include "incpart/errors.hpp"

namespace incpart {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("composition must have at least one part");
  for (int part : parts_) {
    if (part < 1) throw DomainError("composition parts must be positive");
    n_ += part;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c.parts()[i]);
  }
  return out + ")";
}

IncrementSequence::IncrementSequence(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw InvalidSequenceError("increment sequence must be non-empty");
  if (bits_.front() != 1) throw InvalidSequenceError("increment sequence must start with 1");
  for (int b : bits_) {
    if (b != 0 && b != 1) throw InvalidSequenceError("increment bits must be 0 or 1");
  }
}

int IncrementSequence::ones() const {
  return std::accumulate(bits_.begin(), bits_.end(), 0);
}

std::string to_string(const IncrementSequence& x) {
  std::string out;
  for (int b : x.bits()) out += static_cast<char>('0' + b);
  return out;
}

namespace {

// Fills parts[pos..] with every composition of `remaining` into `slots` parts,
// largest leading part first, which yields decreasing dictionary order.
void compositions_descending(int remaining, int slots, std::vector<int>& parts,
                             std::vector<Composition>& out) {
  if (slots == 1) {
    parts.push_back(remaining);
    out.emplace_back(parts);
    parts.pop_back();
    return;
  }
  for (int first = remaining - (slots - 1); first >= 1; --first) {
    parts.push_back(first);
    compositions_descending(remaining - first, slots - 1, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("enumerate_compositions requires 1 <= k <= n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  std::vector<Composition> out;
  out.reserve(binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1)).get_ui());
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(k));
  compositions_descending(n, k, parts, out);
  return out;
}

std::vector<Composition> all_compositions(int n) {
  if (n < 1) throw DomainError("all_compositions requires n >= 1");
  std::vector<Composition> out;
  for (int k = 1; k <= n; ++k) {
    auto block = enumerate_compositions(n, k);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

Composition gap_encode(const IncrementSequence& x) {
  std::vector<int> gaps;
  int last = 1;
  for (int i = 2; i <= x.n(); ++i) {
    if (x.bit(i) == 1) {
      gaps.push_back(i - last);
      last = i;
    }
  }
  gaps.push_back(x.n() + 1 - last);
  return Composition(std::move(gaps));
}

IncrementSequence gap_decode(const Composition& d) {
  std::vector<int> bits;
  bits.reserve(static_cast<std::size_t>(d.n()));
  for (int gap : d.parts()) {
    bits.push_back(1);
    bits.insert(bits.end(), static_cast<std::size_t>(gap - 1), 0);
  }
  return IncrementSequence(std::move(bits));
}

void require_same_shape(const Composition& y, const Composition& z) {
  if (y.n() != z.n() || y.k() != z.k()) {
    throw DomainError("compositions " + to_string(y) + " and " + to_string(z) +
                      " are not in the same S_{n,k}");
  }
}

bool partial_order_geq(const Composition& y, const Composition& z) {
  require_same_shape(y, z);
  int prefix_y = 0;
  int prefix_z = 0;
  for (int i = 0; i < y.k(); ++i) {
    prefix_y += y.parts()[static_cast<std::size_t>(i)];
    prefix_z += z.parts()[static_cast<std::size_t>(i)];
    if (prefix_y < prefix_z) return false;
  }
  return true;
}

bool dict_order_greater(const Composition& y, const Composition& z) {
  require_same_shape(y, z);
  return y > z;
}

BigInt count_partitions_with_sizes(const Composition& b) {
  BigInt count = 1;
  int remaining = b.n();
  for (int part : b.parts()) {
    // The smallest remaining element opens the block; choose the other part-1.
    count *= binomial(static_cast<unsigned>(remaining - 1), static_cast<unsigned>(part - 1));
    remaining -= part;
  }
  return count;
}

}  // namespace incpart
