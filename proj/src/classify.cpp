#include "superschur/classify.hpp"

#include <stdexcept>

namespace superschur {

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t max_part) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n == 0 ? 1 : n);
  return out;
}

std::vector<std::pair<Partition, Partition>> labels_type_I(std::size_t d,
                                                           std::size_t p) {
  if (p == 0)
    throw std::invalid_argument(
        "type I labels need an odd prime p: the degree condition "
        "|lambda| + p|mu| = d degenerates at p = 0");
  std::vector<std::pair<Partition, Partition>> out;
  for (std::size_t mu_size = 0; p * mu_size <= d; ++mu_size)
    for (const auto& lambda : partitions_of(d - p * mu_size))
      for (const auto& mu : partitions_of(mu_size))
        out.emplace_back(lambda, mu);
  return out;
}

std::vector<Partition> labels_type_II(std::size_t d, std::size_t p) {
  std::vector<Partition> out;
  for (const auto& lambda : partitions_of(d)) {
    bool ok = true;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
      if (lambda[i] == lambda[i + 1] && (p == 0 || lambda[i] % p != 0)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(lambda);
  }
  return out;
}

std::vector<std::vector<std::size_t>> weight_compositions(std::size_t n,
                                                          std::size_t d) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  return compositions(n, d);
}

}  // namespace superschur
