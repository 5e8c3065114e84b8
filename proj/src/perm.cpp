#include "superschur/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superschur {

Permutation::Permutation(std::size_t n) : map_(n) {
  std::iota(map_.begin(), map_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> one_line)
    : map_(std::move(one_line)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw std::invalid_argument("transposition out of range");
  Permutation p(n);
  std::swap(p.map_[i], p.map_[i + 1]);
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Permutation Permutation::then(const Permutation& o) const {
  if (size() != o.size()) throw std::invalid_argument("size mismatch");
  std::vector<std::size_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = o.map_[map_[i]];
  return Permutation(std::move(r));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> r(size());
  for (std::size_t i = 0; i < size(); ++i) r[map_[i]] = i;
  return Permutation(std::move(r));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

std::vector<std::size_t> Permutation::reduced_word() const {
  // Bubble-sort the one-line word to the identity.  Each swap at position i
  // peels off s_i on the left, so the swaps in the order performed satisfy
  // *this == s_{w0}.then(s_{w1}).then(...); the count equals the number of
  // inversions, so the word is reduced.
  std::vector<std::size_t> w = map_;
  std::vector<std::size_t> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        swaps.push_back(i);
        moved = true;
      }
    }
  }
  return swaps;
}

int Permutation::sign() const { return reduced_word().size() % 2 == 0 ? 1 : -1; }

std::vector<std::vector<std::size_t>> multiset_arrangements(
    std::vector<std::size_t> word) {
  std::sort(word.begin(), word.end());
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

unsigned long long binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long long factorial(std::size_t n) {
  unsigned long long r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<std::vector<std::size_t>> compositions(std::size_t n,
                                                   std::size_t sum) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    if (sum == 0) out.push_back({});
    return out;
  }
  std::vector<std::size_t> cur(n, 0);
  // recursive descent, first coordinate largest first
  auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::size_t v = left + 1; v-- > 0;) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, sum);
  return out;
}

}  // namespace superschur
