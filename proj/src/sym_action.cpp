#include "superschur/sym_action.hpp"

#include <algorithm>
#include <stdexcept>

namespace superschur {

SuperMap transposition_action(const TensorPower& power, std::size_t i) {
  const std::size_t d = power.exponent();
  if (i + 2 > d) throw std::invalid_argument("transposition index out of range");
  const Field& f = power.base().field();
  Matrix m(f, power.dim(), power.dim());
  for (std::size_t pos = 0; pos < power.dim(); ++pos) {
    auto idx = power.decode(pos);
    int sign = (power.base().parity(idx[i]) == 1 &&
                power.base().parity(idx[i + 1]) == 1)
                   ? -1
                   : 1;
    std::swap(idx[i], idx[i + 1]);
    m.at(power.encode(idx), pos) =
        sign < 0 ? -Scalar::one(f) : Scalar::one(f);
  }
  return SuperMap(power.space(), power.space(), std::move(m));
}

SuperMap transposition_action(const SuperSpace& m, std::size_t d,
                              std::size_t i) {
  return transposition_action(TensorPower(m, d), i);
}

SuperMap permutation_action(const TensorPower& power,
                            const Permutation& sigma) {
  if (sigma.size() != power.exponent())
    throw std::invalid_argument("permutation size mismatch");
  SuperMap act = SuperMap::identity(power.space());
  // sigma = ... o s_{w1} o s_{w0}, so R(sigma) = T_{w0} T_{w1} ...
  for (std::size_t i : sigma.reduced_word())
    act = compose(act, transposition_action(power, i));
  return act;
}

SuperMap permutation_action(const SuperSpace& m, std::size_t d,
                            const Permutation& sigma) {
  return permutation_action(TensorPower(m, d), sigma);
}

unsigned long long gamma_dimension(std::size_t m, std::size_t n,
                                   std::size_t d) {
  unsigned long long total = 0;
  for (std::size_t l = 0; l <= d; ++l) {
    std::size_t k = d - l;
    unsigned long long even_part =
        (k == 0) ? 1 : (m == 0 ? 0 : binomial(m + k - 1, k));
    total += even_part * binomial(n, l);
  }
  return total;
}

namespace {

// weakly increasing sequences of the given length over {0..m-1}
std::vector<std::vector<std::size_t>> multisets(std::size_t m,
                                                std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  if (m == 0) return out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t low) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t v = low; v < m; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// sign of an arrangement relative to the sorted base word: count inversions
// of the odd letters (odd letters are distinct within a label)
int arrangement_sign(const std::vector<std::size_t>& word,
                     const std::vector<int>& letter_parity) {
  int sign = 1;
  for (std::size_t p = 0; p < word.size(); ++p) {
    if (letter_parity[word[p]] != 1) continue;
    for (std::size_t q = p + 1; q < word.size(); ++q)
      if (letter_parity[word[q]] == 1 && word[p] > word[q]) sign = -sign;
  }
  return sign;
}

Vec orbit_sum_vector(const TensorPower& power,
                     const std::vector<std::size_t>& base_word) {
  const SuperSpace& base = power.base();
  const Field& f = base.field();
  std::vector<int> letter_parity(base.dim());
  for (std::size_t i = 0; i < base.dim(); ++i)
    letter_parity[i] = base.parity(i);
  Vec v = zero_vec(f, power.dim());
  for (const auto& word : multiset_arrangements(base_word)) {
    int sign = arrangement_sign(word, letter_parity);
    Scalar s = Scalar::one(f);
    if (sign < 0) s = -s;
    v[power.encode(word)] += s;
  }
  return v;
}

}  // namespace

Matrix GammaBasis::embedding() const {
  return Matrix::from_columns(power.base().field(), power.dim(), vectors);
}

GammaBasis gamma_orbit_basis(const SuperSpace& m, std::size_t d) {
  // orbit sums over coset representatives (no division by stabilizer
  // orders, so correct in characteristic p)
  const std::size_t even_count = m.sdim().even;
  const std::size_t odd_count = m.sdim().odd;
  GammaBasis basis{TensorPower(m, d), {}, {}};
  for (std::size_t t = 0; t <= std::min(d, odd_count); ++t) {
    for (const auto& odd_set : subsets_of_size(odd_count, t)) {
      for (const auto& even_multi : multisets(even_count, d - t)) {
        GammaLabel label;
        for (std::size_t i : even_multi) {
          if (!label.even.empty() && label.even.back().first == i)
            ++label.even.back().second;
          else
            label.even.emplace_back(i, 1);
        }
        std::vector<std::size_t> word = even_multi;
        for (std::size_t j : odd_set) {
          label.odd.push_back(even_count + j);
          word.push_back(even_count + j);
        }
        basis.vectors.push_back(orbit_sum_vector(basis.power, word));
        basis.labels.push_back(std::move(label));
      }
    }
  }
  return basis;
}

GammaBasis gamma_invariants(const SuperSpace& m, std::size_t d) {
  GammaBasis basis = gamma_orbit_basis(m, d);
  const TensorPower& power = basis.power;
  const Field& f = m.field();

  // independent route: joint kernel of (action(s_i) - id)
  std::vector<Vec> kernel;
  if (d <= 1 || power.dim() == 0) {
    for (std::size_t j = 0; j < power.dim(); ++j) {
      Vec e = zero_vec(f, power.dim());
      e[j] = Scalar::one(f);
      kernel.push_back(std::move(e));
    }
  } else {
    Matrix stacked(f, (d - 1) * power.dim(), power.dim());
    for (std::size_t i = 0; i + 1 < d; ++i) {
      SuperMap s = transposition_action(power, i);
      for (std::size_t r = 0; r < power.dim(); ++r)
        for (std::size_t c = 0; c < power.dim(); ++c) {
          Scalar v = s.at(r, c);
          if (r == c) v -= Scalar::one(f);
          stacked.at(i * power.dim() + r, c) = v;
        }
    }
    kernel = stacked.kernel_basis();
  }

  // the two routes must produce the same subspace
  if (basis.count() != kernel.size() ||
      span_rank(f, basis.power.dim(), basis.vectors) != basis.count() ||
      !same_span(f, basis.power.dim(), basis.vectors, kernel))
    throw std::logic_error("gamma basis does not match the invariant kernel");
  return basis;
}

int SymmetricBasis::parity(std::size_t i) const {
  int p = 0;
  for (std::size_t v : monomials[i]) p += power.base().parity(v);
  return p % 2;
}

std::size_t SymmetricBasis::section(std::size_t i) const {
  return power.encode(monomials[i]);
}

SymmetricBasis symmetric_power(const SuperSpace& m, std::size_t d) {
  TensorPower power(m, d);
  const Field& f = m.field();
  const std::size_t even_count = m.sdim().even;
  const std::size_t odd_count = m.sdim().odd;

  std::vector<std::vector<std::size_t>> monomials;
  for (std::size_t t = 0; t <= std::min(d, odd_count); ++t)
    for (const auto& odd_set : subsets_of_size(odd_count, t))
      for (const auto& even_multi : multisets(even_count, d - t)) {
        std::vector<std::size_t> mono = even_multi;
        for (std::size_t j : odd_set) mono.push_back(even_count + j);
        monomials.push_back(std::move(mono));
      }

  std::vector<std::size_t> index_of(power.dim(), monomials.size());
  for (std::size_t i = 0; i < monomials.size(); ++i)
    index_of[power.encode(monomials[i])] = i;

  Matrix quotient(f, monomials.size(), power.dim());
  for (std::size_t pos = 0; pos < power.dim(); ++pos) {
    auto idx = power.decode(pos);
    // a repeated odd letter kills the class (char != 2)
    bool dead = false;
    for (std::size_t a = 0; a < idx.size() && !dead; ++a)
      for (std::size_t b = a + 1; b < idx.size() && !dead; ++b)
        if (idx[a] == idx[b] && m.parity(idx[a]) == 1) dead = true;
    if (dead) continue;
    // sort to the monomial representative, counting odd-odd swaps
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b + 1 < idx.size(); ++b) {
        if (idx[b] <= idx[b + 1]) continue;
        if (m.parity(idx[b]) == 1 && m.parity(idx[b + 1]) == 1) sign = -sign;
        std::swap(idx[b], idx[b + 1]);
      }
    std::size_t mono = index_of[power.encode(idx)];
    quotient.at(mono, pos) = sign < 0 ? -Scalar::one(f) : Scalar::one(f);
  }

  // certify: the quotient kills x - x.s_i for every basis tensor x
  for (std::size_t i = 0; i + 1 < d; ++i) {
    SuperMap s = transposition_action(power, i);
    for (std::size_t pos = 0; pos < power.dim(); ++pos) {
      Vec col = s.matrix().column(pos);
      Vec ecol = zero_vec(f, power.dim());
      ecol[pos] = Scalar::one(f);
      axpy(col, -Scalar::one(f), ecol);
      if (!is_zero_vec(quotient.apply(col)))
        throw std::logic_error("symmetric quotient not well defined");
    }
  }
  return SymmetricBasis{std::move(power), std::move(monomials),
                        std::move(quotient)};
}

bool gamma_embedding_check(const SuperSpace& m, std::size_t d, std::size_t e) {
  const Field& f = m.field();
  GammaBasis whole = gamma_invariants(m, d + e);
  GammaBasis left = gamma_invariants(m, d);
  GammaBasis right = gamma_invariants(m, e);

  // span of u (x) v inside M^{(x)(d+e)}, via multi-index concatenation
  std::vector<Vec> products;
  for (const Vec& u : left.vectors)
    for (const Vec& v : right.vectors) {
      Vec prod = zero_vec(f, whole.power.dim());
      for (std::size_t up = 0; up < u.size(); ++up) {
        if (u[up].is_zero()) continue;
        auto ui = left.power.decode(up);
        for (std::size_t vp = 0; vp < v.size(); ++vp) {
          if (v[vp].is_zero()) continue;
          auto vi = right.power.decode(vp);
          std::vector<std::size_t> idx = ui;
          idx.insert(idx.end(), vi.begin(), vi.end());
          prod[whole.power.encode(idx)] += u[up] * v[vp];
        }
      }
      products.push_back(std::move(prod));
    }

  SolveEngine engine(
      Matrix::from_columns(f, whole.power.dim(), products));
  for (const Vec& w : whole.vectors)
    if (!engine.contains(w)) return false;
  return true;
}

ExponentialDecomposition exponential_decomposition(const SuperSpace& m,
                                                   const SuperSpace& n,
                                                   std::size_t d) {
  if (!(m.field() == n.field())) throw std::invalid_argument("field mismatch");
  const Field& f = m.field();
  SpacePerm sum = direct_sum(m, n);
  GammaBasis whole = gamma_invariants(sum.space, d);

  // inclusion of basis indices into the canonical sum space
  auto incl_m = [&](std::size_t i) { return sum.to_canonical[i]; };
  auto incl_n = [&](std::size_t j) { return sum.to_canonical[m.dim() + j]; };

  std::vector<std::pair<GammaBasis, GammaBasis>> pieces;
  std::vector<Vec> columns;
  for (std::size_t i = 0; i <= d; ++i) {
    GammaBasis left = gamma_invariants(m, d - i);
    GammaBasis right = gamma_invariants(n, i);
    for (const Vec& u : left.vectors)
      for (const Vec& v : right.vectors) {
        // push u (x) v into (M (+) N)^{(x)d} and symmetrize over shuffles
        Vec pushed = zero_vec(f, whole.power.dim());
        for (std::size_t up = 0; up < u.size(); ++up) {
          if (u[up].is_zero()) continue;
          auto uidx = left.power.decode(up);
          for (std::size_t vp = 0; vp < v.size(); ++vp) {
            if (v[vp].is_zero()) continue;
            auto vidx = right.power.decode(vp);
            std::vector<std::size_t> word;
            word.reserve(d);
            for (std::size_t x : uidx) word.push_back(incl_m(x));
            for (std::size_t y : vidx) word.push_back(incl_n(y));
            Scalar coeff = u[up] * v[vp];
            for (const auto& first_block : subsets_of_size(d, d - i)) {
              // shuffle sending word slot k to position first_block[k]:
              // with out[x] = word[sigma(x)], sigma(first_block[k]) = k
              std::vector<std::size_t> one_line(d);
              std::vector<bool> used(d, false);
              for (std::size_t k = 0; k < d - i; ++k) {
                one_line[first_block[k]] = k;
                used[first_block[k]] = true;
              }
              std::size_t next = 0;
              for (std::size_t k = 0; k < d; ++k)
                if (!used[k]) one_line[k] = d - i + next++;
              Permutation sigma(one_line);
              std::vector<std::size_t> moved;
              int sign = whole.power.place_permute(word, sigma, moved);
              Scalar c = coeff;
              if (sign < 0) c = -c;
              pushed[whole.power.encode(moved)] += c;
            }
          }
        }
        columns.push_back(std::move(pushed));
      }
    pieces.emplace_back(std::move(left), std::move(right));
  }

  if (columns.size() != whole.count())
    throw std::logic_error("exponential property dimension mismatch");
  // express the shuffle products in the Gamma^d(M+N) basis; must be invertible
  SolveEngine engine(whole.embedding());
  Matrix change(f, whole.count(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    auto coords = engine.solve(columns[j]);
    if (!coords)
      throw std::logic_error("shuffle product escapes the invariant subspace");
    for (std::size_t r = 0; r < whole.count(); ++r)
      change.at(r, j) = (*coords)[r];
  }
  if (change.rank() != whole.count())
    throw std::logic_error("exponential change of basis is singular");
  return ExponentialDecomposition{std::move(sum), std::move(whole),
                                  std::move(pieces), std::move(change)};
}

}  // namespace superschur
