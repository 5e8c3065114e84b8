#include "superschur/duality.hpp"

#include <numeric>
#include <stdexcept>

#include "superschur/supermap.hpp"

namespace superschur {

namespace {

// Koszul sign of the d-fold evaluation pairing on matching index tuples:
// (-1)^{sum_{k<l} p_l p_k} from eq-style tensor pairing, i.e. one factor per
// odd pair, C(o,2) in total.
int matching_pair_sign(std::size_t odd_letters) {
  return (odd_letters * (odd_letters - 1) / 2) % 2 == 0 ? 1 : -1;
}

std::size_t tuple_rank(const std::vector<std::size_t>& t, std::size_t base) {
  std::size_t r = 0;
  for (auto v : t) r = r * base + v;
  return r;
}

// conjugate an algebra onto the parity-sorted basis order (stable)
SuperAlgebra parity_sorted_algebra(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a.parity(x) < a.parity(y);
  });
  std::vector<std::size_t> pos(n);  // old index -> new position
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  Vec unit = zero_vec(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    par[i] = a.parity(order[i]);
    lab[i] = a.label(order[i]);
    unit[i] = a.unit()[order[i]];
  }
  std::vector<std::vector<SuperAlgebra::SparseVec>> prod(
      n, std::vector<SuperAlgebra::SparseVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : a.product(order[i], order[j]))
        prod[i][j].emplace_back(pos[k], c);
  return SuperAlgebra(a.name(), a.field(), std::move(par), std::move(lab),
                      std::move(unit), std::move(prod));
}

SuperSpace algebra_superspace(const SuperAlgebra& a, bool dual) {
  std::vector<std::string> lab = a.labels();
  if (dual)
    for (auto& l : lab) l += "^";
  return SuperSpace(a.field(), a.parities(), std::move(lab));
}

}  // namespace

GammaSymPairing gamma_sym_pairing(const SuperSpace& m, std::size_t d) {
  const Field& f = m.field();
  GammaSymPairing out{gamma_invariants(m, d),
                      symmetric_power(dual_space(m), d), Matrix(f, 0, 0),
                      false, false};

  // pairing of a dual-power basis tuple with a primal-power basis tuple:
  // zero unless equal, else the matching sign
  auto pair_tuple_with_gamma = [&](const std::vector<std::size_t>& tuple,
                                   const Vec& gamma_vec) {
    std::size_t odd = 0;
    for (auto t : tuple) odd += m.parity(t) == 1;
    std::size_t pos = out.gamma.power.encode(tuple);
    Scalar v = gamma_vec[pos];
    if (matching_pair_sign(odd) < 0) v = -v;
    return v;
  };
  out.gram = Matrix(f, out.sym_dual.count(), out.gamma.count());
  for (std::size_t i = 0; i < out.sym_dual.count(); ++i)
    for (std::size_t j = 0; j < out.gamma.count(); ++j)
      out.gram.at(i, j) = pair_tuple_with_gamma(out.sym_dual.monomials[i],
                                                out.gamma.vectors[j]);

  // well-definedness: u - u.s_i pairs to zero against every invariant
  out.well_defined = true;
  const TensorPower& dual_power = out.sym_dual.power;
  for (std::size_t i = 0; i + 1 < d && out.well_defined; ++i) {
    for (std::size_t pos = 0; pos < dual_power.dim(); ++pos) {
      auto idx = dual_power.decode(pos);
      std::vector<std::size_t> moved;
      Permutation s = Permutation::transposition(d, i);
      int sign = dual_power.place_permute(idx, s, moved);
      for (std::size_t j = 0; j < out.gamma.count(); ++j) {
        Scalar a = pair_tuple_with_gamma(idx, out.gamma.vectors[j]);
        Scalar b = pair_tuple_with_gamma(moved, out.gamma.vectors[j]);
        if (sign < 0) b = -b;
        if (a != b) {
          out.well_defined = false;
          break;
        }
      }
      if (!out.well_defined) break;
    }
  }
  out.perfect = out.well_defined &&
                out.sym_dual.count() == out.gamma.count() &&
                out.gram.rank() == out.gamma.count();
  return out;
}

ModuleAction twisted_dual_module(const ModuleAction& action,
                                 const AlgebraMap& tau) {
  if (!tau.anti) throw std::invalid_argument("tau must be an antiautomorphism");
  tau.verify();
  if (action.side != Side::right)
    throw std::invalid_argument("twisted dual expects a right module");
  const Field& f = action.space.field();
  SuperSpace dual = dual_space(action.space);
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < action.algebra.dim(); ++x) {
    // f.a = transpose of the action of tau(a)
    Matrix m(f, dual.dim(), dual.dim());
    for (std::size_t z = 0; z < action.algebra.dim(); ++z) {
      const Scalar& c = tau.matrix.at(z, x);
      if (!c.is_zero()) m = m + action.matrices[z].transpose().scaled(c);
    }
    mats.push_back(std::move(m));
  }
  ModuleAction out{action.algebra, std::move(dual), Side::right,
                   std::move(mats)};
  out.audit();
  return out;
}

void Cosuperalgebra::audit() const {
  const std::size_t n = dim();
  // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
  for (std::size_t k = 0; k < n; ++k) {
    Vec left = zero_vec(field, n), right = zero_vec(field, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& c = delta.at(i * n + j, k);
        if (c.is_zero()) continue;
        left[j] += counit[i] * c;
        right[i] += counit[j] * c;
      }
    for (std::size_t i = 0; i < n; ++i) {
      Scalar want = i == k ? Scalar::one(field) : Scalar::zero(field);
      if (left[i] != want || right[i] != want)
        throw std::logic_error("counit law violated");
    }
  }
  // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          Scalar lhs = Scalar::zero(field), rhs = Scalar::zero(field);
          for (std::size_t m = 0; m < n; ++m) {
            lhs += delta.at(a * n + b, m) * delta.at(m * n + c, k);
            rhs += delta.at(b * n + c, m) * delta.at(a * n + m, k);
          }
          if (lhs != rhs) throw std::logic_error("coassociativity violated");
        }
}

Cosuperalgebra dual_cosuperalgebra(const SuperAlgebra& b) {
  const std::size_t n = b.dim();
  Matrix delta(b.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : b.product(i, j))
        delta.at(i * n + j, k) += c;
  Vec counit = b.unit();
  std::vector<std::string> lab = b.labels();
  for (auto& l : lab) l += "^";
  Cosuperalgebra out{b.field(), b.parities(), std::move(lab), std::move(delta),
                     std::move(counit)};
  out.audit();
  return out;
}

SuperAlgebra dual_algebra_of_cosuperalgebra(const Cosuperalgebra& a,
                                            std::string name) {
  const std::size_t n = a.dim();
  const Field& f = a.field;
  std::vector<std::vector<SuperAlgebra::SparseVec>> prod(
      n, std::vector<SuperAlgebra::SparseVec>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      SuperAlgebra::SparseVec out;
      for (std::size_t k = 0; k < n; ++k) {
        // <e_p^ e_q^, e_k> = Delta(e_k)[p,q] * (-1)^{|q||p|}
        Scalar c = a.delta.at(p * n + q, k);
        if (c.is_zero()) continue;
        if (a.parities[p] == 1 && a.parities[q] == 1) c = -c;
        out.emplace_back(k, c);
      }
      prod[p][q] = std::move(out);
    }
  std::vector<std::string> lab(n);
  for (std::size_t i = 0; i < n; ++i) lab[i] = a.labels[i] + "^";
  return SuperAlgebra(std::move(name), f, a.parities, std::move(lab),
                      a.counit, std::move(prod));
}

Cosuperalgebra tensor_cosuperalgebra(const Cosuperalgebra& a,
                                     const Cosuperalgebra& b) {
  if (!(a.field == b.field)) throw std::invalid_argument("field mismatch");
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  const Field& f = a.field;
  std::vector<int> par(n);
  std::vector<std::string> lab(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      par[i * nb + j] = (a.parities[i] + b.parities[j]) % 2;
      lab[i * nb + j] = a.labels[i] + "(x)" + b.labels[j];
    }
  Matrix delta(f, n * n, n);
  for (std::size_t k1 = 0; k1 < na; ++k1)
    for (std::size_t k2 = 0; k2 < nb; ++k2) {
      // (1 (x) swap (x) 1)(Delta_a (x) Delta_b): the middle swap crosses the
      // second factor of Delta_a past the first factor of Delta_b
      std::size_t k = k1 * nb + k2;
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
          const Scalar& ca = a.delta.at(i * na + j, k1);
          if (ca.is_zero()) continue;
          for (std::size_t u = 0; u < nb; ++u)
            for (std::size_t v = 0; v < nb; ++v) {
              const Scalar& cb = b.delta.at(u * nb + v, k2);
              if (cb.is_zero()) continue;
              Scalar c = ca * cb;
              if (a.parities[j] == 1 && b.parities[u] == 1) c = -c;
              std::size_t left = i * nb + u, right = j * nb + v;
              delta.at(left * n + right, k) += c;
            }
        }
    }
  Vec counit = zero_vec(f, n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      counit[i * nb + j] = a.counit[i] * b.counit[j];
  Cosuperalgebra out{f, std::move(par), std::move(lab), std::move(delta),
                     std::move(counit)};
  out.audit();
  return out;
}

DoubleDualReport double_dual_algebra_check(const SuperAlgebra& b) {
  SuperAlgebra dd = dual_algebra_of_cosuperalgebra(dual_cosuperalgebra(b),
                                                   b.name() + "^^");
  SuperAlgebra minus = minus_algebra(b);
  DoubleDualReport rep{b.dim(), true};
  for (std::size_t i = 0; i < b.dim() && rep.matches_minus_twist; ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      Vec lhs = zero_vec(b.field(), b.dim()), rhs = lhs;
      for (const auto& [k, c] : dd.product(i, j)) lhs[k] += c;
      for (const auto& [k, c] : minus.product(i, j)) rhs[k] += c;
      if (lhs != rhs) {
        rep.matches_minus_twist = false;
        break;
      }
    }
  if (dd.unit() != minus.unit()) rep.matches_minus_twist = false;
  return rep;
}

bool tensor_power_dual_check(const SuperAlgebra& b, std::size_t d) {
  const Field& f = b.field();
  Cosuperalgebra a = dual_cosuperalgebra(b);
  SuperAlgebra adual = dual_algebra_of_cosuperalgebra(a, "A^");
  SuperAlgebra lhs = tensor_power_algebra(adual, d);

  Cosuperalgebra apow = a;
  for (std::size_t k = 1; k < d; ++k) apow = tensor_cosuperalgebra(apow, a);
  SuperAlgebra rhs = dual_algebra_of_cosuperalgebra(apow, "(A^(x)d)^");

  // identification sign on a basis tuple: (-1)^{sum_{k<l} p_k p_l}
  const std::size_t n = lhs.dim();
  std::vector<int> sign(n, 1);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t x = r;
    std::vector<int> par;
    for (std::size_t k = 0; k < d; ++k) {
      par.push_back(adual.parity(x % adual.dim()));
      x /= adual.dim();
    }
    int odd = 0;
    for (int p : par) odd += p;
    sign[r] = matching_pair_sign(odd);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec l = zero_vec(f, n), r = zero_vec(f, n);
      for (const auto& [k, c] : lhs.product(i, j)) {
        Scalar v = c;
        if (sign[i] * sign[j] * sign[k] < 0) v = -v;
        l[k] += v;
      }
      for (const auto& [k, c] : rhs.product(i, j)) r[k] += c;
      if (l != r) return false;
    }
  return true;
}

CosalgReport cosalg_duality_check(const SuperAlgebra& b_in, std::size_t d) {
  const Field& f = b_in.field();
  SuperAlgebra b = parity_sorted_algebra(b_in);
  const std::size_t n = b.dim();
  CosalgReport rep;

  // --- S^d(B^dual) as a coalgebra -------------------------------------
  Cosuperalgebra a = dual_cosuperalgebra(b);
  SuperSpace a_space = algebra_superspace(b, /*dual=*/true);
  SymmetricBasis sym = symmetric_power(a_space, d);
  const std::size_t cnt = sym.count();
  const TensorPower& apower = sym.power;

  // tensor-level comultiplication A^{(x)d} -> S^d (x) S^d
  Matrix big_delta(f, cnt * cnt, apower.dim());
  for (std::size_t pos = 0; pos < apower.dim(); ++pos) {
    auto tup = apower.decode(pos);
    // expand Delta^{(x)d}, reshuffle (x_k, y_k) pairs with Koszul signs,
    // project both halves
    struct Term {
      std::vector<std::size_t> x, y;
      Scalar c;
    };
    std::vector<Term> terms = {{{}, {}, Scalar::one(f)}};
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Term> next;
      for (const auto& t : terms)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Scalar& c = a.delta.at(i * n + j, tup[k]);
            if (c.is_zero()) continue;
            Term nt = t;
            // y_k crosses the later x_l while re-sorting; it is cheaper to
            // count the crossings now: y entries accumulated so far cross x_k
            int cross = 0;
            for (auto yprev : t.y) cross += a.parities[yprev];
            nt.c = nt.c * c;
            if (cross % 2 == 1 && a.parities[i] == 1) nt.c = -nt.c;
            nt.x.push_back(i);
            nt.y.push_back(j);
            next.push_back(std::move(nt));
          }
      terms = std::move(next);
    }
    for (const auto& t : terms) {
      Vec qx = sym.quotient.column(apower.encode(t.x));
      Vec qy = sym.quotient.column(apower.encode(t.y));
      for (std::size_t u = 0; u < cnt; ++u) {
        if (qx[u].is_zero()) continue;
        for (std::size_t v = 0; v < cnt; ++v)
          if (!qy[v].is_zero())
            big_delta.at(u * cnt + v, pos) += t.c * qx[u] * qy[v];
      }
    }
  }

  // well defined: kills u - u.s_i
  rep.comultiplication_well_defined = true;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    SuperMap s = transposition_action(apower, i);
    Matrix defect = big_delta * s.matrix() - big_delta;
    if (!defect.is_zero()) rep.comultiplication_well_defined = false;
  }

  // counit of S^d A and the dual algebra of the quotient coalgebra
  Vec counit_sym = zero_vec(f, cnt);
  for (std::size_t i = 0; i < cnt; ++i) {
    Scalar c = Scalar::one(f);
    for (auto t : sym.monomials[i]) c *= a.counit[t];
    counit_sym[i] = c;
  }
  std::vector<std::vector<SuperAlgebra::SparseVec>> prod(
      cnt, std::vector<SuperAlgebra::SparseVec>(cnt));
  for (std::size_t u = 0; u < cnt; ++u)
    for (std::size_t v = 0; v < cnt; ++v) {
      SuperAlgebra::SparseVec out;
      for (std::size_t m = 0; m < cnt; ++m) {
        Scalar c = big_delta.at(u * cnt + v, sym.section(m));
        if (c.is_zero()) continue;
        if (sym.parity(u) == 1 && sym.parity(v) == 1) c = -c;
        out.emplace_back(m, c);
      }
      prod[u][v] = std::move(out);
    }
  std::vector<std::string> lab(cnt);
  for (std::size_t i = 0; i < cnt; ++i) lab[i] = "s" + std::to_string(i + 1);
  std::vector<int> par(cnt);
  for (std::size_t i = 0; i < cnt; ++i) par[i] = sym.parity(i);
  SuperAlgebra sym_dual("S^d(B^)^", f, std::move(par), std::move(lab),
                        counit_sym, std::move(prod));
  rep.sym_dual_dim = sym_dual.dim();

  // --- Gamma^d(B^-) as a subalgebra of (B^-)^{(x)d} --------------------
  SuperAlgebra bminus = minus_algebra(b);
  SuperSpace b_space = algebra_superspace(b, /*dual=*/false);
  GammaBasis gb = gamma_invariants(b_space, d);
  SuperAlgebra bpow = tensor_power_algebra(bminus, d);
  rep.gamma_minus_dim = gb.count();

  // gamma vectors in lexicographic tuple coordinates of bpow
  auto to_lex = [&](const Vec& v) {
    Vec out = zero_vec(f, bpow.dim());
    for (std::size_t pos = 0; pos < v.size(); ++pos)
      if (!v[pos].is_zero())
        out[tuple_rank(gb.power.decode(pos), n)] += v[pos];
    return out;
  };
  std::vector<Vec> gamma_lex;
  for (const auto& v : gb.vectors) gamma_lex.push_back(to_lex(v));
  SolveEngine engine(Matrix::from_columns(f, bpow.dim(), gamma_lex));

  std::vector<std::vector<SuperAlgebra::SparseVec>> gprod(
      gb.count(), std::vector<SuperAlgebra::SparseVec>(gb.count()));
  for (std::size_t i = 0; i < gb.count(); ++i)
    for (std::size_t j = 0; j < gb.count(); ++j) {
      auto coords = engine.solve(bpow.multiply(gamma_lex[i], gamma_lex[j]));
      if (!coords)
        throw std::logic_error("Gamma^d(B^-) is not closed under product");
      for (std::size_t k = 0; k < gb.count(); ++k)
        if (!(*coords)[k].is_zero()) gprod[i][j].emplace_back(k, (*coords)[k]);
    }
  auto unit_coords = engine.solve(bpow.unit());
  if (!unit_coords)
    throw std::logic_error("unit tensor is not invariant");
  std::vector<std::string> glab(gb.count());
  std::vector<int> gpar(gb.count());
  for (std::size_t i = 0; i < gb.count(); ++i) {
    glab[i] = "g" + std::to_string(i + 1);
    gpar[i] = gb.parity(i);
  }
  SuperAlgebra gamma_minus("Gamma^d(B^-)", f, std::move(gpar), std::move(glab),
                           std::move(*unit_coords), std::move(gprod));

  // --- the canonical map and the isomorphism check ---------------------
  // invariant u maps to the functional [m] -> u_m * (-1)^{o(m) + C(o(m),2)}
  Matrix phi(f, cnt, gb.count());
  for (std::size_t j = 0; j < gb.count(); ++j)
    for (std::size_t m = 0; m < cnt; ++m) {
      std::size_t o = 0;
      for (auto t : sym.monomials[m]) o += b.parity(t) == 1;
      Scalar v = gamma_lex[j][tuple_rank(sym.monomials[m], n)];
      if ((o + o * (o - 1) / 2) % 2 == 1) v = -v;
      phi.at(m, j) = v;
    }

  rep.iso_verified = cnt == gb.count() && phi.rank() == cnt;
  if (rep.iso_verified) {
    // unital
    Vec mapped_unit = phi.apply(gamma_minus.unit());
    if (mapped_unit != sym_dual.unit()) rep.iso_verified = false;
    // multiplicative on all basis pairs
    for (std::size_t i = 0; i < gb.count() && rep.iso_verified; ++i)
      for (std::size_t j = 0; j < gb.count(); ++j) {
        Vec gi = zero_vec(f, gb.count()), gj = gi;
        gi[i] = gj[j] = Scalar::one(f);
        Vec lhs = phi.apply(gamma_minus.multiply(gi, gj));
        Vec rhs = sym_dual.multiply(phi.apply(gi), phi.apply(gj));
        if (lhs != rhs) {
          rep.iso_verified = false;
          break;
        }
      }
  }
  return rep;
}

}  // namespace superschur
