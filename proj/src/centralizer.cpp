#include "superschur/centralizer.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace superschur {

namespace {

// vec index of entry (r, c) of a w_dim x v_dim matrix
inline std::size_t vec_index(std::size_t r, std::size_t c, std::size_t v_dim) {
  return r * v_dim + c;
}

Matrix unvec(const Field& f, const Vec& x, std::size_t w_dim,
             std::size_t v_dim) {
  Matrix m(f, w_dim, v_dim);
  for (std::size_t r = 0; r < w_dim; ++r)
    for (std::size_t c = 0; c < v_dim; ++c) m.at(r, c) = x[vec_index(r, c, v_dim)];
  return m;
}

// X -> X*A - B*X applied to a matrix
Matrix commutator_defect(const Matrix& x, const Matrix& a, const Matrix& b) {
  return x * a - b * x;
}

// {X : X A_i = B_i X} when every A_i, B_i is a signed permutation: the
// constraints link matrix entries along orbits with signs, so the kernel is
// a direct sum of consistent orbit vectors.  Union-find with sign parity.
std::vector<Matrix> signed_perm_commutant(const Field& f,
                                          const std::vector<SignedPerm>& a,
                                          const std::vector<SignedPerm>& b,
                                          std::size_t v_dim,
                                          std::size_t w_dim) {
  const std::size_t total = v_dim * w_dim;
  std::vector<std::size_t> parent(total);
  std::vector<int> rel(total, 1);  // sign relative to parent
  std::vector<bool> dead_root(total, false);
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  auto find = [&](std::size_t x) {
    // path compression, accumulating signs
    std::size_t root = x;
    int s = 1;
    while (parent[root] != root) {
      s *= rel[root];
      root = parent[root];
    }
    std::size_t cur = x;
    int cs = s;
    while (parent[cur] != cur) {
      std::size_t next = parent[cur];
      int step = rel[cur];
      parent[cur] = root;
      rel[cur] = cs;
      cs = cs / step;  // sign of next relative to root
      cur = next;
    }
    return std::pair<std::size_t, int>{root, s};
  };
  auto unite = [&](std::size_t x, std::size_t y, int sign_xy) {
    // X[x] = sign_xy * X[y]
    auto [rx, sx] = find(x);
    auto [ry, sy] = find(y);
    if (rx == ry) {
      if (sx != sign_xy * sy) dead_root[rx] = true;
      return;
    }
    parent[ry] = rx;
    rel[ry] = sx * sign_xy * sy;  // sign of ry relative to rx
    if (dead_root[ry]) dead_root[rx] = true;
  };

  for (std::size_t gi = 0; gi < a.size(); ++gi) {
    const SignedPerm& p = a[gi];
    const SignedPerm& q = b[gi];
    std::vector<std::size_t> q_inv(w_dim);
    for (std::size_t c = 0; c < w_dim; ++c) q_inv[q.image[c]] = c;
    for (std::size_t r = 0; r < w_dim; ++r)
      for (std::size_t c = 0; c < v_dim; ++c) {
        // eps_p(c) X[r, p(c)] = eps_q(q^{-1}(r)) X[q^{-1}(r), c]
        std::size_t lhs = r * v_dim + p.image[c];
        std::size_t rhs = q_inv[r] * v_dim + c;
        unite(lhs, rhs, q.sign[q_inv[r]] * p.sign[c]);
      }
  }

  std::vector<std::vector<std::pair<std::size_t, int>>> components(total);
  for (std::size_t x = 0; x < total; ++x) {
    auto [root, s] = find(x);
    components[root].emplace_back(x, s);
  }
  std::vector<Matrix> out;
  for (std::size_t root = 0; root < total; ++root) {
    if (components[root].empty() || dead_root[root]) continue;
    Matrix m(f, w_dim, v_dim);
    for (auto [x, s] : components[root])
      m.at(x / v_dim, x % v_dim) =
          s > 0 ? Scalar::one(f) : -Scalar::one(f);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Matrix> matrix_commutant(const Field& f,
                                     const std::vector<Matrix>& a,
                                     const std::vector<Matrix>& b,
                                     std::size_t v_dim, std::size_t w_dim) {
  if (a.size() != b.size())
    throw std::invalid_argument("constraint count mismatch");
  const std::size_t unknowns = v_dim * w_dim;

  // fast path: all constraints are signed permutations (true for the
  // symmetric-group and Clifford generators), solved orbitwise
  {
    std::vector<SignedPerm> pa, pb;
    bool all_perm = !a.empty();
    for (std::size_t i = 0; i < a.size() && all_perm; ++i) {
      auto x = as_signed_permutation(a[i]);
      auto y = as_signed_permutation(b[i]);
      if (x && y) {
        pa.push_back(std::move(*x));
        pb.push_back(std::move(*y));
      } else {
        all_perm = false;
      }
    }
    if (all_perm) return signed_perm_commutant(f, pa, pb, v_dim, w_dim);
  }

  // current solution basis, as matrices; starts as all of Hom(V, W)
  std::vector<Matrix> kernel;
  bool full_space = true;
  for (std::size_t gi = 0; gi < a.size(); ++gi) {
    if (full_space) {
      // first constraint: solve the N x N operator directly
      Matrix op(f, unknowns, unknowns);
      // L(X)[r,c] = sum_j X[r,j] A[j,c] - sum_i B[r,i] X[i,c]
      for (std::size_t r = 0; r < w_dim; ++r)
        for (std::size_t c = 0; c < v_dim; ++c) {
          std::size_t row = vec_index(r, c, v_dim);
          for (std::size_t j = 0; j < v_dim; ++j)
            op.at(row, vec_index(r, j, v_dim)) += a[gi].at(j, c);
          for (std::size_t i = 0; i < w_dim; ++i)
            op.at(row, vec_index(i, c, v_dim)) -= b[gi].at(r, i);
        }
      for (const Vec& x : op.kernel_basis())
        kernel.push_back(unvec(f, x, w_dim, v_dim));
      full_space = false;
      continue;
    }
    if (kernel.empty()) break;
    // restrict the constraint to the current kernel
    Matrix restricted(f, unknowns, kernel.size());
    for (std::size_t k = 0; k < kernel.size(); ++k) {
      Matrix defect = commutator_defect(kernel[k], a[gi], b[gi]);
      for (std::size_t r = 0; r < w_dim; ++r)
        for (std::size_t c = 0; c < v_dim; ++c)
          restricted.at(vec_index(r, c, v_dim), k) = defect.at(r, c);
    }
    std::vector<Matrix> next;
    for (const Vec& coeff : restricted.kernel_basis()) {
      Matrix combo(f, w_dim, v_dim);
      for (std::size_t k = 0; k < kernel.size(); ++k)
        if (!coeff[k].is_zero()) combo = combo + kernel[k].scaled(coeff[k]);
      next.push_back(std::move(combo));
    }
    kernel = std::move(next);
  }
  if (full_space) {
    // no constraints at all: the whole hom space
    for (std::size_t r = 0; r < w_dim; ++r)
      for (std::size_t c = 0; c < v_dim; ++c) {
        Matrix e(f, w_dim, v_dim);
        e.at(r, c) = Scalar::one(f);
        kernel.push_back(std::move(e));
      }
  }
  return kernel;
}

SuperSpace Commutant::as_superspace() const {
  std::vector<std::string> labels(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels[i] = "h" + std::to_string(i + 1);
  return SuperSpace(source_space.field(), parities, std::move(labels));
}

Commutant hom_over_algebra(const ModuleAction& v, const ModuleAction& w,
                           std::vector<std::size_t> generators) {
  if (!(v.algebra.name() == w.algebra.name()) ||
      v.algebra.dim() != w.algebra.dim() || v.side != w.side)
    throw std::invalid_argument("hom_over_algebra: algebra/side mismatch");
  const Field& f = v.space.field();
  if (generators.empty()) {
    generators.resize(v.algebra.dim());
    std::iota(generators.begin(), generators.end(), std::size_t{0});
  }

  std::vector<Matrix> raw;
  if (v.side == Side::right) {
    std::vector<Matrix> a, b;
    for (auto g : generators) {
      a.push_back(v.matrices[g]);
      b.push_back(w.matrices[g]);
    }
    raw = matrix_commutant(f, a, b, v.space.dim(), w.space.dim());
  } else {
    // left modules: phi(a x) = (-1)^{|phi||a|} a phi(x); solve per parity of
    // phi and keep the matching graded part
    for (int s : {0, 1}) {
      std::vector<Matrix> a, b;
      for (auto g : generators) {
        // constraint reads X L_a = (-1)^{s|a|} L_a X
        a.push_back(v.matrices[g]);
        Matrix bm = w.matrices[g];
        if (s == 1 && v.algebra.parity(g) == 1)
          bm = bm.scaled(-Scalar::one(f));
        b.push_back(std::move(bm));
      }
      for (const Matrix& x :
           matrix_commutant(f, a, b, v.space.dim(), w.space.dim())) {
        SuperMap sm(v.space, w.space, x);
        Matrix part = (s == 0 ? sm.even_part() : sm.odd_part()).matrix();
        if (!part.is_zero()) raw.push_back(std::move(part));
      }
    }
  }

  // split into homogeneous parts; each part is again a solution
  std::vector<Matrix> even, odd;
  for (const Matrix& x : raw) {
    SuperMap sm(v.space, w.space, x);
    Matrix e = sm.even_part().matrix(), o = sm.odd_part().matrix();
    if (!e.is_zero()) even.push_back(std::move(e));
    if (!o.is_zero()) odd.push_back(std::move(o));
  }
  // reduce each block to an independent set (deterministic: RREF rows);
  // orbit-solver output has pairwise disjoint supports and skips the RREF
  auto reduce = [&](std::vector<Matrix>& block) {
    if (block.empty()) return;
    {
      std::vector<bool> seen(v.space.dim() * w.space.dim(), false);
      bool disjoint = true;
      for (const Matrix& m : block)
        for (std::size_t r = 0; r < m.rows() && disjoint; ++r)
          for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.at(r, c).is_zero()) continue;
            std::size_t pos = r * m.cols() + c;
            if (seen[pos]) {
              disjoint = false;
              break;
            }
            seen[pos] = true;
          }
      if (disjoint) return;
    }
    Matrix stacked(f, block.size(), v.space.dim() * w.space.dim());
    for (std::size_t i = 0; i < block.size(); ++i) {
      Vec flat = block[i].flatten();
      for (std::size_t j = 0; j < flat.size(); ++j) stacked.at(i, j) = flat[j];
    }
    auto ech = stacked.reduced_echelon();
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < ech.rank; ++r) {
      Vec row = zero_vec(f, stacked.cols());
      for (std::size_t j = 0; j < stacked.cols(); ++j)
        row[j] = ech.rref.at(r, j);
      out.push_back(unvec(f, row, w.space.dim(), v.space.dim()));
    }
    block = std::move(out);
  };
  reduce(even);
  reduce(odd);

  Commutant c{v.space, w.space, {}, {}, even.size()};
  for (auto& m : even) {
    c.basis.push_back(std::move(m));
    c.parities.push_back(0);
  }
  for (auto& m : odd) {
    c.basis.push_back(std::move(m));
    c.parities.push_back(1);
  }

  // audit against every algebra basis element; for signed permutation
  // actions the defect is compared entrywise on the sparse supports
  std::vector<std::optional<SignedPerm>> vp(v.algebra.dim()),
      wp(v.algebra.dim());
  for (std::size_t g = 0; g < v.algebra.dim(); ++g) {
    vp[g] = as_signed_permutation(v.matrices[g]);
    wp[g] = as_signed_permutation(w.matrices[g]);
  }
  for (std::size_t g = 0; g < v.algebra.dim(); ++g)
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
      int twist =
          (v.side == Side::left && c.parities[i] == 1 &&
           v.algebra.parity(g) == 1)
              ? -1
              : 1;
      bool ok = true;
      if (vp[g] && wp[g]) {
        const SignedPerm& p = *vp[g];
        const SignedPerm& q = *wp[g];
        std::vector<std::size_t> pinv(p.image.size());
        for (std::size_t x = 0; x < p.image.size(); ++x) pinv[p.image[x]] = x;
        const Matrix& x = c.basis[i];
        // push each nonzero of X through both sides and compare supports:
        // (X rho_V(g)) has X[r,c0] at (r, pinv[c0]) with sign p.sign[pinv[c0]],
        // (rho_W(g) X) has X[r,c0] at (q(r), c0) with sign q.sign[r]
        std::map<std::pair<std::size_t, std::size_t>, Scalar> lhs, rhs;
        for (std::size_t r = 0; r < x.rows() && ok; ++r)
          for (std::size_t c0 = 0; c0 < x.cols(); ++c0) {
            const Scalar& val = x.at(r, c0);
            if (val.is_zero()) continue;
            Scalar lv = val;
            if (p.sign[pinv[c0]] < 0) lv = -lv;
            lhs[{r, pinv[c0]}] = lv;
            Scalar rv = val;
            if (q.sign[r] * twist < 0) rv = -rv;
            rhs[{q.image[r], c0}] = rv;
          }
        ok = lhs == rhs;
      } else {
        Matrix lhs = c.basis[i] * v.matrices[g];
        Matrix rhs = w.matrices[g] * c.basis[i];
        if (twist < 0) rhs = rhs.scaled(-Scalar::one(f));
        ok = (lhs - rhs).is_zero();
      }
      if (!ok) throw std::logic_error("commutant audit failed");
    }
  return c;
}

std::vector<std::size_t> group_algebra_generators(std::size_t d) {
  std::vector<std::size_t> gens;
  if (d == 1) {
    gens.push_back(0);
    return gens;
  }
  for (std::size_t i = 0; i + 1 < d; ++i)
    gens.push_back(group_algebra_index(d, Permutation::transposition(d, i)));
  return gens;
}

std::vector<std::size_t> wreath_generators(const SuperAlgebra& a,
                                           std::size_t d) {
  // s_i (x) unit-monomial, plus e (x) (a_j in slot 1): enough when the unit
  // of A is the monomial 0 (true for Clifford) and the a_j generate A
  std::size_t block = 1;
  for (std::size_t k = 0; k < d; ++k) block *= a.dim();
  std::vector<std::size_t> gens;
  std::size_t id_idx = group_algebra_index(d, Permutation(d));
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::size_t si = group_algebra_index(d, Permutation::transposition(d, i));
    gens.push_back(si * block + 0);
  }
  // all single-slot monomials (a_j, 1, ..., 1) in slot 0
  std::size_t stride = block / a.dim();
  for (std::size_t j = 1; j < a.dim(); ++j)
    gens.push_back(id_idx * block + j * stride);
  if (gens.empty()) gens.push_back(id_idx * block);
  return gens;
}

SuperAlgebra commutant_algebra(std::string name, const Commutant& c) {
  if (!(c.source_space == c.target_space))
    throw std::invalid_argument("commutant_algebra needs endomorphisms");
  const Field& f = c.source_space.field();
  const std::size_t n = c.count();
  const std::size_t dim2 = c.source_space.dim() * c.source_space.dim();
  std::vector<Vec> flats;
  for (const auto& m : c.basis) flats.push_back(m.flatten());
  SolveEngine engine(Matrix::from_columns(f, dim2, flats));

  std::vector<std::vector<SuperAlgebra::SparseVec>> prod(
      n, std::vector<SuperAlgebra::SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec p = (c.basis[i] * c.basis[j]).flatten();
      auto coords = engine.solve(p);
      if (!coords)
        throw std::logic_error("commutant is not closed under composition");
      for (std::size_t k = 0; k < n; ++k)
        if (!(*coords)[k].is_zero()) prod[i][j].emplace_back(k, (*coords)[k]);
    }
  auto unit_coords =
      engine.solve(Matrix::identity(f, c.source_space.dim()).flatten());
  if (!unit_coords) throw std::logic_error("commutant does not contain id");

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "b" + std::to_string(i + 1);
  return SuperAlgebra(std::move(name), f, c.parities, std::move(labels),
                      std::move(*unit_coords), std::move(prod));
}

unsigned long long schur_I_dimension(std::size_t m, std::size_t n,
                                     std::size_t d) {
  return gamma_dimension(m * m + n * n, 2 * m * n, d);
}

unsigned long long schur_II_dimension(std::size_t n, std::size_t d) {
  return gamma_dimension(n * n, n * n, d);
}

SuperAlgebra schur_I(std::size_t m, std::size_t n, std::size_t d,
                     const Field& f) {
  ModuleAction act = sym_group_action_module(m, n, d, f);
  Commutant c = hom_over_algebra(act, act, group_algebra_generators(d));
  std::string name = "S(" + std::to_string(m) + "|" + std::to_string(n) + "," +
                     std::to_string(d) + ")";
  return commutant_algebra(std::move(name), c);
}

SuperAlgebra schur_II(std::size_t n, std::size_t d, const Field& f) {
  ModuleAction act = sergeev_action(n, d, f);
  Commutant c =
      hom_over_algebra(act, act, wreath_generators(clifford(1, f), d));
  std::string name = "Q(" + std::to_string(n) + "," + std::to_string(d) + ")";
  return commutant_algebra(std::move(name), c);
}

DoubleCentralizerReport double_centralizer(std::size_t n, std::size_t d,
                                           const Field& f) {
  DoubleCentralizerReport rep;
  rep.n = n;
  rep.d = d;
  rep.hypothesis_met = n >= d;

  ModuleAction act = sergeev_action(n, d, f);
  rep.wreath_dim = act.algebra.dim();
  const std::size_t dim = act.space.dim();

  std::vector<Vec> image;
  for (const auto& m : act.matrices) image.push_back(m.flatten());
  rep.image_rank = span_rank(f, dim * dim, image);
  rep.injective = rep.image_rank == rep.wreath_dim;

  Commutant q = hom_over_algebra(act, act, wreath_generators(clifford(1, f), d));
  rep.schur_dim = q.count();

  std::vector<Matrix> bicommutant =
      matrix_commutant(f, q.basis, q.basis, dim, dim);
  rep.bicommutant_dim = bicommutant.size();

  std::vector<Vec> bic;
  for (const auto& m : bicommutant) bic.push_back(m.flatten());
  rep.image_equals_bicommutant = same_span(f, dim * dim, image, bic);
  return rep;
}

WeightDecomposition weight_decomposition(std::size_t n, std::size_t d,
                                         const Field& f) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
  ModuleAction act = sergeev_action(n, d, f);
  TensorPower power(u1_module(n, Side::right, f).space, d);

  WeightDecomposition wd;
  wd.n = n;
  wd.d = d;
  auto lambda_set = compositions(n, d);
  std::vector<std::size_t> weight_index;  // per tensor position
  std::vector<std::vector<std::size_t>> block_positions(lambda_set.size());
  for (std::size_t pos = 0; pos < power.dim(); ++pos) {
    auto idx = power.decode(pos);
    std::vector<std::size_t> weight(n, 0);
    for (auto b : idx) ++weight[b % n];  // copy index of u_i / u'_i
    auto it = std::find(lambda_set.begin(), lambda_set.end(), weight);
    block_positions[it - lambda_set.begin()].push_back(pos);
  }
  // the W(d) action preserves each block
  std::vector<std::size_t> block_of(power.dim());
  for (std::size_t b = 0; b < lambda_set.size(); ++b)
    for (auto pos : block_positions[b]) block_of[pos] = b;
  for (const auto& m : act.matrices)
    for (std::size_t r = 0; r < power.dim(); ++r)
      for (std::size_t c = 0; c < power.dim(); ++c)
        if (!m.at(r, c).is_zero() && block_of[r] != block_of[c])
          throw std::logic_error("weight blocks are not W(d)-stable");

  for (std::size_t b = 0; b < lambda_set.size(); ++b)
    wd.blocks.push_back(WeightBlock{lambda_set[b], block_positions[b]});
  return wd;
}

}  // namespace superschur
