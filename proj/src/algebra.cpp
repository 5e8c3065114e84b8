#include "superschur/algebra.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "superschur/tensor_power.hpp"

namespace superschur {

namespace {

using SparseVec = SuperAlgebra::SparseVec;

// multi-index codec for A^{(x)d}, lexicographic
std::size_t tuple_rank(const std::vector<std::size_t>& t, std::size_t base) {
  std::size_t r = 0;
  for (auto v : t) r = r * base + v;
  return r;
}

std::vector<std::size_t> tuple_unrank(std::size_t r, std::size_t base,
                                      std::size_t d) {
  std::vector<std::size_t> t(d);
  for (std::size_t k = d; k-- > 0;) {
    t[k] = r % base;
    r /= base;
  }
  return t;
}

}  // namespace

SuperAlgebra::SuperAlgebra(std::string name, const Field& f,
                           std::vector<int> parities,
                           std::vector<std::string> labels, Vec unit,
                           std::vector<std::vector<SparseVec>> products)
    : name_(std::move(name)), field_(f), parities_(std::move(parities)),
      labels_(std::move(labels)), unit_(std::move(unit)),
      products_(std::move(products)) {
  if (labels_.size() != parities_.size() || unit_.size() != parities_.size() ||
      products_.size() != parities_.size())
    throw std::invalid_argument("algebra data size mismatch");
  audit();
}

SuperAlgebra SuperAlgebra::renamed(std::string new_name) const {
  SuperAlgebra copy = *this;
  copy.name_ = std::move(new_name);
  return copy;
}

Vec SuperAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != dim() || b.size() != dim())
    throw std::invalid_argument("algebra element size mismatch");
  Vec out = zero_vec(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (const auto& [k, s] : products_[i][j]) out[k] += c * s;
    }
  }
  return out;
}

void SuperAlgebra::audit() const {
  const std::size_t n = dim();
  // parity additivity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : products_[i][j])
        if (!c.is_zero() && parities_[k] != (parities_[i] + parities_[j]) % 2)
          throw std::logic_error(name_ + ": parity additivity violated");
  // unit laws: unit * e_j and e_i * unit via the sparse table
  for (std::size_t j = 0; j < n; ++j) {
    Vec left = zero_vec(field_, n), right = zero_vec(field_, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!unit_[i].is_zero())
        for (const auto& [k, c] : products_[i][j]) left[k] += unit_[i] * c;
      if (!unit_[i].is_zero())
        for (const auto& [k, c] : products_[j][i]) right[k] += unit_[i] * c;
    }
    for (std::size_t k = 0; k < n; ++k) {
      Scalar want = k == j ? Scalar::one(field_) : Scalar::zero(field_);
      if (left[k] != want || right[k] != want)
        throw std::logic_error(name_ + ": unit law violated");
    }
  }
  // associativity on basis triples; sparse expansion keeps this cheap.
  // Exhaustive up to dim 64, random sample above.
  Vec acc_l = zero_vec(field_, n), acc_r = zero_vec(field_, n);
  std::vector<std::size_t> touched;
  auto clear_touched = [&](Vec& v) {
    for (auto t : touched) v[t] = Scalar::zero(field_);
  };
  auto check_triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    touched.clear();
    for (const auto& [l, c] : products_[i][j])
      for (const auto& [m, c2] : products_[l][k]) {
        acc_l[m] += c * c2;
        touched.push_back(m);
      }
    for (const auto& [l, c] : products_[j][k])
      for (const auto& [m, c2] : products_[i][l]) {
        acc_r[m] += c * c2;
        touched.push_back(m);
      }
    for (auto t : touched)
      if (acc_l[t] != acc_r[t])
        throw std::logic_error(name_ + ": associativity violated");
    clear_touched(acc_l);
    clear_touched(acc_r);
  };
  if (n <= 64) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    std::mt19937_64 rng(0x5eed5eed ^ n);
    for (int trial = 0; trial < 20000; ++trial)
      check_triple(rng() % n, rng() % n, rng() % n);
  }
}

void AlgebraMap::verify() const {
  const Field& f = source.field();
  for (std::size_t c = 0; c < matrix.cols(); ++c)
    for (std::size_t r = 0; r < matrix.rows(); ++r)
      if (!matrix.at(r, c).is_zero() && target.parity(r) != source.parity(c))
        throw std::logic_error("algebra map is not even");
  if (apply(source.unit()) != target.unit())
    throw std::logic_error("algebra map does not preserve the unit");
  for (std::size_t i = 0; i < source.dim(); ++i)
    for (std::size_t j = 0; j < source.dim(); ++j) {
      Vec ei = zero_vec(f, source.dim()), ej = zero_vec(f, source.dim());
      ei[i] = ej[j] = Scalar::one(f);
      Vec lhs = apply(source.multiply(ei, ej));
      Vec rhs = anti ? target.multiply(apply(ej), apply(ei))
                     : target.multiply(apply(ei), apply(ej));
      if (lhs != rhs)
        throw std::logic_error(anti ? "map is not anti-multiplicative"
                                    : "map is not multiplicative");
    }
}

SuperAlgebra ground_field_algebra(const Field& f) {
  std::vector<std::vector<SparseVec>> prod(1);
  prod[0].push_back({{0, Scalar::one(f)}});
  return SuperAlgebra("k", f, {0}, {"1"}, {Scalar::one(f)}, std::move(prod));
}

SuperAlgebra split_pair_algebra(const Field& f) {
  std::vector<std::vector<SparseVec>> prod(2, std::vector<SparseVec>(2));
  prod[0][0] = {{0, Scalar::one(f)}};
  prod[1][1] = {{1, Scalar::one(f)}};
  Vec unit = {Scalar::one(f), Scalar::one(f)};
  return SuperAlgebra("k+k", f, {0, 0}, {"u", "v"}, std::move(unit),
                      std::move(prod));
}

SuperAlgebra clifford(std::size_t d, const Field& f) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  for (std::size_t s = 0; s < n; ++s) {
    par[s] = __builtin_popcountll(s) % 2;
    std::string l;
    for (std::size_t i = 0; i < d; ++i)
      if (s & (std::size_t{1} << i)) l += "c" + std::to_string(i + 1);
    lab[s] = l.empty() ? "1" : l;
  }
  std::vector<std::vector<SparseVec>> prod(n, std::vector<SparseVec>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      // c_S c_T = sign * c_{S xor T}: generator t crosses the generators of
      // S above it while moving to its slot; c_i^2 = +1
      int swaps = 0;
      for (std::size_t i = 0; i < d; ++i) {
        if (!(t & (std::size_t{1} << i))) continue;
        for (std::size_t j = i + 1; j < d; ++j)
          if (s & (std::size_t{1} << j)) ++swaps;
      }
      Scalar c = Scalar::one(f);
      if (swaps % 2) c = -c;
      prod[s][t] = {{s ^ t, c}};
    }
  Vec unit = zero_vec(f, n);
  unit[0] = Scalar::one(f);
  return SuperAlgebra("C(" + std::to_string(d) + ")", f, std::move(par),
                      std::move(lab), std::move(unit), std::move(prod));
}

CliffordMatrixModel clifford_matrix_model(const Field& f) {
  // basis I (even), J1 = [[0,1],[1,0]] (odd); table from actual 2x2 products
  Matrix i2 = Matrix::identity(f, 2);
  Matrix j1(f, 2, 2);
  j1.at(0, 1) = j1.at(1, 0) = Scalar::one(f);
  std::vector<Matrix> basis = {i2, j1};
  std::vector<std::vector<SparseVec>> prod(2, std::vector<SparseVec>(2));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Matrix p = basis[a] * basis[b];
      // a product of the generators is diagonal (multiple of I) or
      // antidiagonal (multiple of J1)
      SparseVec s;
      if (!p.at(0, 0).is_zero()) s.emplace_back(0, p.at(0, 0));
      if (!p.at(0, 1).is_zero()) s.emplace_back(1, p.at(0, 1));
      prod[a][b] = std::move(s);
    }
  Vec unit = {Scalar::one(f), Scalar::zero(f)};
  SuperAlgebra alg("C(1)mat", f, {0, 1}, {"I", "J1"}, std::move(unit),
                   std::move(prod));
  AlgebraMap map{clifford(1, f), alg, Matrix::identity(f, 2), false};
  map.verify();
  return CliffordMatrixModel{std::move(alg), std::move(map)};
}

SuperAlgebra tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("field mismatch");
  const Field& f = a.field();
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      par[i * nb + j] = (a.parity(i) + b.parity(j)) % 2;
      lab[i * nb + j] = a.label(i) + "(x)" + b.label(j);
    }
  std::vector<std::vector<SparseVec>> prod(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          // (a_i (x) b_j)(a_k (x) b_l) = (-1)^{|b_j||a_k|} a_i a_k (x) b_j b_l
          int sign = (b.parity(j) == 1 && a.parity(k) == 1) ? -1 : 1;
          SparseVec& out = prod[i * nb + j][k * nb + l];
          for (const auto& [x, cx] : a.product(i, k))
            for (const auto& [y, cy] : b.product(j, l)) {
              Scalar c = cx * cy;
              if (sign < 0) c = -c;
              out.emplace_back(x * nb + y, c);
            }
        }
  Vec unit = zero_vec(f, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  return SuperAlgebra(a.name() + "(x)" + b.name(), f, std::move(par),
                      std::move(lab), std::move(unit), std::move(prod));
}

SuperAlgebra tensor_power_algebra(const SuperAlgebra& a, std::size_t d) {
  const Field& f = a.field();
  const std::size_t na = a.dim();
  std::size_t n = 1;
  for (std::size_t k = 0; k < d; ++k) n *= na;
  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto t = tuple_unrank(r, na, d);
    int p = 0;
    std::string l;
    for (std::size_t k = 0; k < d; ++k) {
      p += a.parity(t[k]);
      if (k) l += "(x)";
      l += a.label(t[k]);
    }
    par[r] = p % 2;
    lab[r] = l.empty() ? "1" : l;
  }
  std::vector<std::vector<SparseVec>> prod(n, std::vector<SparseVec>(n));
  for (std::size_t r = 0; r < n; ++r) {
    auto x = tuple_unrank(r, na, d);
    for (std::size_t s = 0; s < n; ++s) {
      auto y = tuple_unrank(s, na, d);
      // (x_1 (x)...(x) x_d)(y_1 (x)...(x) y_d): y_i crosses x_j for j > i
      int cross = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          cross += a.parity(y[i]) * a.parity(x[j]);
      Scalar base = Scalar::one(f);
      if (cross % 2) base = -base;
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms = {
          {std::vector<std::size_t>{}, base}};
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
        for (const auto& [prefix, c] : terms)
          for (const auto& [z, cz] : a.product(x[k], y[k])) {
            auto p = prefix;
            p.push_back(z);
            next.emplace_back(std::move(p), c * cz);
          }
        terms = std::move(next);
      }
      SparseVec out;
      for (const auto& [t, c] : terms) out.emplace_back(tuple_rank(t, na), c);
      prod[r][s] = std::move(out);
    }
  }
  Vec unit = zero_vec(f, n);
  {
    std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms = {
        {std::vector<std::size_t>{}, Scalar::one(f)}};
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
      for (const auto& [prefix, c] : terms)
        for (std::size_t i = 0; i < na; ++i)
          if (!a.unit()[i].is_zero()) {
            auto p = prefix;
            p.push_back(i);
            next.emplace_back(std::move(p), c * a.unit()[i]);
          }
      terms = std::move(next);
    }
    for (const auto& [t, c] : terms) unit[tuple_rank(t, na)] += c;
  }
  return SuperAlgebra(a.name() + "^(x)" + std::to_string(d), f, std::move(par),
                      std::move(lab), std::move(unit), std::move(prod));
}

SuperAlgebra group_algebra(std::size_t d, const Field& f) {
  if (d < 1) throw std::invalid_argument("group algebra needs d >= 1");
  auto perms = Permutation::all(d);
  const std::size_t n = perms.size();
  std::vector<int> par(n, 0);
  std::vector<std::string> lab(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string l = "(";
    for (std::size_t k = 0; k < d; ++k) {
      if (k) l += " ";
      l += std::to_string(perms[i](k) + 1);
    }
    lab[i] = l + ")";
  }
  std::vector<std::vector<SparseVec>> prod(n, std::vector<SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      // classical composition: (sigma tau)(x) = sigma(tau(x))
      prod[i][j] = {
          {group_algebra_index(d, perms[j].then(perms[i])), Scalar::one(f)}};
  Vec unit = zero_vec(f, n);
  unit[group_algebra_index(d, Permutation(d))] = Scalar::one(f);
  return SuperAlgebra("kS" + std::to_string(d), f, std::move(par),
                      std::move(lab), std::move(unit), std::move(prod));
}

std::size_t group_algebra_index(std::size_t d, const Permutation& sigma) {
  // lexicographic rank of the one-line word
  std::vector<std::size_t> avail(d);
  for (std::size_t i = 0; i < d; ++i) avail[i] = i;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < d; ++k) {
    auto it = std::find(avail.begin(), avail.end(), sigma(k));
    rank += static_cast<std::size_t>(it - avail.begin()) * factorial(d - k - 1);
    avail.erase(it);
  }
  return rank;
}

std::size_t wreath_index(const SuperAlgebra& a, std::size_t d,
                         const Permutation& sigma,
                         const std::vector<std::size_t>& monomial) {
  std::size_t block = 1;
  for (std::size_t k = 0; k < d; ++k) block *= a.dim();
  return group_algebra_index(d, sigma) * block +
         tuple_rank(monomial, a.dim());
}

SuperAlgebra wreath(const SuperAlgebra& a, std::size_t d) {
  if (d < 1) throw std::invalid_argument("wreath product needs d >= 1");
  const Field& f = a.field();
  auto perms = Permutation::all(d);
  const std::size_t np = perms.size(), na = a.dim();
  std::size_t block = 1;
  for (std::size_t k = 0; k < d; ++k) block *= na;
  const std::size_t n = np * block;

  SuperAlgebra apow = tensor_power_algebra(a, d);

  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  for (std::size_t p = 0; p < np; ++p) {
    std::string pl = "(";
    for (std::size_t k = 0; k < d; ++k) {
      if (k) pl += " ";
      pl += std::to_string(perms[p](k) + 1);
    }
    pl += ")";
    for (std::size_t r = 0; r < block; ++r) {
      par[p * block + r] = apow.parity(r);
      lab[p * block + r] = pl + "(x)" + apow.label(r);
    }
  }

  std::vector<int> letter_par(na);
  for (std::size_t i = 0; i < na; ++i) letter_par[i] = a.parity(i);

  std::vector<std::vector<SparseVec>> prod(n, std::vector<SparseVec>(n));
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t r = 0; r < block; ++r) {
      auto t = tuple_unrank(r, na, d);
      std::vector<int> tp(d);
      for (std::size_t i = 0; i < d; ++i) tp[i] = letter_par[t[i]];
      for (std::size_t q = 0; q < np; ++q) {
        // signed place permutation a.sigma' with sigma' = perms[q]
        std::vector<std::size_t> moved(d);
        for (std::size_t i = 0; i < d; ++i) moved[i] = t[perms[q](i)];
        int sign = koszul_sign(tp, perms[q].inverse());
        std::size_t moved_rank = tuple_rank(moved, na);
        // sigma sigma' composes classically: first sigma', then sigma
        std::size_t pq = group_algebra_index(d, perms[q].then(perms[p]));
        for (std::size_t s = 0; s < block; ++s) {
          SparseVec& out = prod[p * block + r][q * block + s];
          for (const auto& [k, c] : apow.product(moved_rank, s)) {
            Scalar v = c;
            if (sign < 0) v = -v;
            out.emplace_back(pq * block + k, v);
          }
        }
      }
    }

  Vec unit = zero_vec(f, n);
  std::size_t id_idx = group_algebra_index(d, Permutation(d));
  for (std::size_t r = 0; r < block; ++r)
    unit[id_idx * block + r] = apow.unit()[r];

  return SuperAlgebra(a.name() + "wrS" + std::to_string(d), f, std::move(par),
                      std::move(lab), std::move(unit), std::move(prod));
}

SuperAlgebra sergeev(std::size_t d, const Field& f) {
  return wreath(clifford(1, f), d).renamed("W(" + std::to_string(d) + ")");
}

SuperAlgebra minus_algebra(const SuperAlgebra& a) {
  std::vector<std::vector<SparseVec>> prod(a.dim(),
                                           std::vector<SparseVec>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      prod[i][j] = a.product(i, j);
      if (a.parity(i) == 1 && a.parity(j) == 1)
        for (auto& [k, c] : prod[i][j]) c = -c;
    }
  return SuperAlgebra(a.name() + "^-", a.field(), a.parities(), a.labels(),
                      a.unit(), std::move(prod));
}

CliffordFactorization clifford_factorization(std::size_t d1, std::size_t d2,
                                             const Field& f) {
  SuperAlgebra src = clifford(d1 + d2, f);
  SuperAlgebra tgt = tensor_algebra(clifford(d1, f), clifford(d2, f));
  const std::size_t n2 = std::size_t{1} << d2;
  std::vector<Vec> gen_img;
  for (std::size_t i = 0; i < d1 + d2; ++i) {
    Vec img = zero_vec(f, tgt.dim());
    if (i < d1)
      img[(std::size_t{1} << i) * n2] = Scalar::one(f);
    else
      img[std::size_t{1} << (i - d1)] = Scalar::one(f);
    gen_img.push_back(std::move(img));
  }
  Matrix m(f, tgt.dim(), src.dim());
  for (std::size_t s = 0; s < src.dim(); ++s) {
    // image of the monomial c_S: ordered product of generator images
    Vec acc = tgt.unit();
    for (std::size_t i = 0; i < d1 + d2; ++i)
      if (s & (std::size_t{1} << i)) acc = tgt.multiply(acc, gen_img[i]);
    for (std::size_t r = 0; r < tgt.dim(); ++r) m.at(r, s) = acc[r];
  }
  AlgebraMap map{std::move(src), tgt, std::move(m), false};
  map.verify();
  if (!map.is_bijective())
    throw std::logic_error("clifford factorization is not bijective");
  return CliffordFactorization{std::move(tgt), std::move(map)};
}

AlgebraMap identity_antiautomorphism(const SuperAlgebra& a) {
  AlgebraMap map{a, a, Matrix::identity(a.field(), a.dim()), true};
  map.verify();
  return map;
}

AlgebraMap tau_antiautomorphism(const SuperAlgebra& a,
                                const AlgebraMap& tau_on_a, std::size_t d,
                                const SuperAlgebra& wreath_algebra) {
  if (!tau_on_a.anti)
    throw std::invalid_argument("tau must be an antiautomorphism");
  tau_on_a.verify();
  const Field& f = a.field();
  const std::size_t na = a.dim();
  std::size_t block = 1;
  for (std::size_t k = 0; k < d; ++k) block *= na;
  auto perms = Permutation::all(d);
  const std::size_t id_idx = group_algebra_index(d, Permutation(d));
  SuperAlgebra apow = tensor_power_algebra(a, d);

  Matrix m(f, wreath_algebra.dim(), wreath_algebra.dim());
  for (std::size_t p = 0; p < perms.size(); ++p) {
    // sigma^{-1} (x) unit tensor
    Vec sig_inv = zero_vec(f, wreath_algebra.dim());
    std::size_t inv_idx = group_algebra_index(d, perms[p].inverse());
    for (std::size_t u = 0; u < block; ++u)
      sig_inv[inv_idx * block + u] = apow.unit()[u];
    for (std::size_t r = 0; r < block; ++r) {
      auto t = tuple_unrank(r, na, d);
      // tau_d on A^{(x)d}: (-1)^{sum_{i<j}|a_i||a_j|} tau(a_1) (x) ...
      int cross = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          cross += a.parity(t[i]) * a.parity(t[j]);
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms = {
          {std::vector<std::size_t>{},
           cross % 2 ? -Scalar::one(f) : Scalar::one(f)}};
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
        for (const auto& [prefix, c] : terms)
          for (std::size_t z = 0; z < na; ++z) {
            const Scalar& cz = tau_on_a.matrix.at(z, t[k]);
            if (cz.is_zero()) continue;
            auto pr = prefix;
            pr.push_back(z);
            next.emplace_back(std::move(pr), c * cz);
          }
        terms = std::move(next);
      }
      // tau(sigma (x) a) = (1 (x) tau_d(a)) (sigma^{-1} (x) 1)
      Vec lhs = zero_vec(f, wreath_algebra.dim());
      for (const auto& [tup, c] : terms)
        lhs[id_idx * block + tuple_rank(tup, na)] += c;
      Vec img = wreath_algebra.multiply(lhs, sig_inv);
      for (std::size_t row = 0; row < wreath_algebra.dim(); ++row)
        m.at(row, p * block + r) = img[row];
    }
  }
  AlgebraMap map{wreath_algebra, wreath_algebra, std::move(m), true};
  map.verify();
  return map;
}

}  // namespace superschur
