#pragma once

#include <cstddef>
#include <vector>

namespace superschur {

/// A permutation of {0, ..., n-1} in one-line notation.  Products compose
/// left to right: (s.then(t))(i) = t(s(i)), matching right actions where
/// v.(st) = (v.s).t.
class Permutation {
 public:
  explicit Permutation(std::size_t n);  // identity
  explicit Permutation(std::vector<std::size_t> one_line);

  static Permutation transposition(std::size_t n, std::size_t i);  // (i i+1)
  /// All of S_n in lexicographic one-line order.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_[i]; }
  const std::vector<std::size_t>& one_line() const { return map_; }

  Permutation then(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

  /// Indices i of adjacent transpositions s_i with this == s_{i1} then s_{i2}
  /// then ..., obtained by bubble sort.  Deterministic.
  std::vector<std::size_t> reduced_word() const;
  int sign() const;

 private:
  std::vector<std::size_t> map_;
};

/// All distinct rearrangements of a multiset word, lexicographic order.
std::vector<std::vector<std::size_t>> multiset_arrangements(
    std::vector<std::size_t> word);

unsigned long long binomial(std::size_t n, std::size_t k);
unsigned long long factorial(std::size_t n);

/// All k-element subsets of {0..n-1}, each increasing, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k);

/// All n-tuples of nonnegative integers with the given sum, in decreasing
/// lexicographic order: (d,0,...), ..., (0,...,d).
std::vector<std::vector<std::size_t>> compositions(std::size_t n,
                                                   std::size_t sum);

}  // namespace superschur
