#include "superschur/superspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superschur {

SuperSpace::SuperSpace(const Field& f, std::vector<int> parities,
                       std::vector<std::string> labels)
    : field_(f), parities_(std::move(parities)), labels_(std::move(labels)) {
  if (parities_.size() != labels_.size())
    throw std::invalid_argument("parity/label length mismatch");
  for (std::size_t i = 0; i < parities_.size(); ++i) {
    if (parities_[i] != 0 && parities_[i] != 1)
      throw std::invalid_argument("parity must be 0 or 1");
    if (i > 0 && parities_[i] < parities_[i - 1])
      throw std::invalid_argument("basis must be even-block-first");
    sdim_.even += parities_[i] == 0;
    sdim_.odd += parities_[i] == 1;
  }
}

SuperSpace SuperSpace::boxed(const Field& f, std::size_t m, std::size_t n) {
  std::vector<int> par;
  std::vector<std::string> lab;
  for (std::size_t i = 0; i < m; ++i) {
    par.push_back(0);
    lab.push_back("e" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    par.push_back(1);
    lab.push_back("e'" + std::to_string(i + 1));
  }
  return SuperSpace(f, std::move(par), std::move(lab));
}

bool SuperSpace::operator==(const SuperSpace& o) const {
  return field_ == o.field_ && parities_ == o.parities_ && labels_ == o.labels_;
}

SpacePerm canonicalize(const Field& f, const std::vector<int>& parities,
                       const std::vector<std::string>& labels) {
  std::vector<std::size_t> order(parities.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return parities[a] < parities[b];
                   });
  std::vector<int> par(parities.size());
  std::vector<std::string> lab(parities.size());
  std::vector<std::size_t> to_canonical(parities.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    par[pos] = parities[order[pos]];
    lab[pos] = labels[order[pos]];
    to_canonical[order[pos]] = pos;
  }
  return SpacePerm{SuperSpace(f, std::move(par), std::move(lab)),
                   std::move(to_canonical)};
}

SpacePerm direct_sum(const SuperSpace& m, const SuperSpace& n) {
  if (!(m.field() == n.field())) throw std::invalid_argument("field mismatch");
  std::vector<int> par = m.parities();
  par.insert(par.end(), n.parities().begin(), n.parities().end());
  std::vector<std::string> lab = m.labels();
  lab.insert(lab.end(), n.labels().begin(), n.labels().end());
  return canonicalize(m.field(), par, lab);
}

SpacePerm tensor_product_space(const SuperSpace& m, const SuperSpace& n) {
  if (!(m.field() == n.field())) throw std::invalid_argument("field mismatch");
  std::vector<int> par;
  std::vector<std::string> lab;
  par.reserve(m.dim() * n.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j) {
      par.push_back((m.parity(i) + n.parity(j)) % 2);
      lab.push_back(m.label(i) + "*" + n.label(j));
    }
  return canonicalize(m.field(), par, lab);
}

SpacePerm hom_space(const SuperSpace& m, const SuperSpace& n) {
  if (!(m.field() == n.field())) throw std::invalid_argument("field mismatch");
  std::vector<int> par;
  std::vector<std::string> lab;
  par.reserve(m.dim() * n.dim());
  for (std::size_t t = 0; t < n.dim(); ++t)
    for (std::size_t s = 0; s < m.dim(); ++s) {
      par.push_back((n.parity(t) + m.parity(s)) % 2);
      lab.push_back("E[" + n.label(t) + "," + m.label(s) + "]");
    }
  return canonicalize(m.field(), par, lab);
}

SpacePerm parity_change(const SuperSpace& m) {
  std::vector<int> par(m.dim());
  std::vector<std::string> lab(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    par[i] = 1 - m.parity(i);
    lab[i] = m.label(i);
  }
  return canonicalize(m.field(), par, lab);
}

SuperSpace dual_space(const SuperSpace& m) {
  std::vector<std::string> lab(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) lab[i] = m.label(i) + "^";
  return SuperSpace(m.field(), m.parities(), std::move(lab));
}

}  // namespace superschur
