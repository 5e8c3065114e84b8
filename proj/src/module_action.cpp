#include "superschur/module_action.hpp"

#include <map>
#include <random>

#include <stdexcept>

namespace superschur {

Matrix ModuleAction::action_of(const Vec& element) const {
  if (element.size() != algebra.dim())
    throw std::invalid_argument("element size mismatch");
  Matrix out(space.field(), space.dim(), space.dim());
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    if (!element[i].is_zero()) out = out + matrices[i].scaled(element[i]);
  return out;
}

void ModuleAction::audit() const {
  const Field& f = space.field();
  if (matrices.size() != algebra.dim())
    throw std::logic_error("one action matrix per algebra basis element");
  // each homogeneous algebra element acts by a matrix of the same parity
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    SuperMap m(space, space, matrices[i]);
    auto par = m.homogeneous_parity();
    if (!par || (!matrices[i].is_zero() && *par != algebra.parity(i)))
      throw std::logic_error(algebra.name() +
                             ": action matrix parity mismatch");
  }
  // representation property: all basis pairs up to dim 64, sampled above;
  // signed-permutation actions compare columnwise without matrix products
  std::vector<std::optional<SignedPerm>> sp(algebra.dim());
  bool all_perm = space.dim() > 0;
  for (std::size_t i = 0; i < algebra.dim() && all_perm; ++i) {
    sp[i] = as_signed_permutation(matrices[i]);
    if (!sp[i]) all_perm = false;
  }
  auto check_pair = [&](std::size_t i, std::size_t j) {
    bool ok;
    if (all_perm) {
      SignedPerm composed = side == Side::right ? sp[j]->after(*sp[i])
                                                : sp[i]->after(*sp[j]);
      ok = true;
      for (std::size_t c = 0; c < space.dim() && ok; ++c) {
        // sum_k coeff_k M_k e_c must equal the single composed entry
        std::map<std::size_t, Scalar> acc;
        for (const auto& [k, coeff] : algebra.product(i, j)) {
          Scalar v = coeff;
          if (sp[k]->sign[c] < 0) v = -v;
          auto [it, fresh] = acc.emplace(sp[k]->image[c], v);
          if (!fresh) it->second += v;
        }
        std::erase_if(acc, [](const auto& e) { return e.second.is_zero(); });
        ok = acc.size() == 1 && acc.begin()->first == composed.image[c] &&
             acc.begin()->second ==
                 (composed.sign[c] < 0 ? -Scalar::one(f) : Scalar::one(f));
      }
    } else {
      Matrix lhs(f, space.dim(), space.dim());
      for (const auto& [k, c] : algebra.product(i, j))
        lhs = lhs + matrices[k].scaled(c);
      Matrix rhs = side == Side::right ? matrices[j] * matrices[i]
                                       : matrices[i] * matrices[j];
      ok = lhs == rhs;
    }
    if (!ok)
      throw std::logic_error(algebra.name() +
                             ": representation property violated");
  };
  if (algebra.dim() <= 64) {
    for (std::size_t i = 0; i < algebra.dim(); ++i)
      for (std::size_t j = 0; j < algebra.dim(); ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(0xac710e ^ algebra.dim());
    for (int trial = 0; trial < 2000; ++trial)
      check_pair(rng() % algebra.dim(), rng() % algebra.dim());
  }
}

ModuleAction trivial_module(const SuperSpace& space) {
  ModuleAction act{ground_field_algebra(space.field()), space, Side::right,
                   {Matrix::identity(space.field(), space.dim())}};
  act.audit();
  return act;
}

ModuleAction u1_module(std::size_t n, Side side, const Field& f) {
  // basis u1..un even, u'1..u'n odd
  std::vector<int> par;
  std::vector<std::string> lab;
  for (std::size_t i = 0; i < n; ++i) {
    par.push_back(0);
    lab.push_back("u" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    par.push_back(1);
    lab.push_back("u'" + std::to_string(i + 1));
  }
  SuperSpace space(f, std::move(par), std::move(lab));
  Matrix c1(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    c1.at(i, n + i) = Scalar::one(f);
    c1.at(n + i, i) = Scalar::one(f);
  }
  ModuleAction act{clifford(1, f), std::move(space), side,
                   {Matrix::identity(f, 2 * n), std::move(c1)}};
  act.audit();
  return act;
}

ModuleAction tensor_module(const ModuleAction& action, std::size_t d) {
  if (d < 1) throw std::invalid_argument("tensor_module needs d >= 1");
  if (action.side != Side::right)
    throw std::invalid_argument("tensor_module expects a right module");
  const Field& f = action.space.field();
  const SuperAlgebra& a = action.algebra;
  TensorPower power(action.space, d);
  SuperAlgebra apow = tensor_power_algebra(a, d);

  std::vector<Matrix> mats;
  mats.reserve(apow.dim());
  std::vector<std::size_t> tup(d);
  for (std::size_t e = 0; e < apow.dim(); ++e) {
    // decode the algebra monomial a_1 (x) ... (x) a_d
    std::size_t r = e;
    for (std::size_t k = d; k-- > 0;) {
      tup[k] = r % a.dim();
      r /= a.dim();
    }
    Matrix m(f, power.dim(), power.dim());
    for (std::size_t pos = 0; pos < power.dim(); ++pos) {
      auto idx = power.decode(pos);
      // sign: a_i crosses v_j for i < j
      int cross = 0;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
          cross += a.parity(tup[i]) * action.space.parity(idx[j]);
      // componentwise action columns
      std::vector<std::pair<std::vector<std::size_t>, Scalar>> terms = {
          {std::vector<std::size_t>{},
           cross % 2 ? -Scalar::one(f) : Scalar::one(f)}};
      for (std::size_t k = 0; k < d; ++k) {
        Vec col = action.matrices[tup[k]].column(idx[k]);
        std::vector<std::pair<std::vector<std::size_t>, Scalar>> next;
        for (const auto& [prefix, c] : terms)
          for (std::size_t t = 0; t < col.size(); ++t) {
            if (col[t].is_zero()) continue;
            auto p = prefix;
            p.push_back(t);
            next.emplace_back(std::move(p), c * col[t]);
          }
        terms = std::move(next);
      }
      for (const auto& [target, c] : terms)
        m.at(power.encode(target), pos) += c;
    }
    mats.push_back(std::move(m));
  }

  ModuleAction act{std::move(apow), power.space(), Side::right,
                   std::move(mats)};
  act.audit();

  // compatibility (v.a).sigma = (v.sigma).(a.sigma) on the generators s_i
  std::vector<int> letter_par(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) letter_par[i] = a.parity(i);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Permutation s = Permutation::transposition(d, i);
    SuperMap rs = transposition_action(power, i);
    for (std::size_t e = 0; e < act.algebra.dim(); ++e) {
      std::size_t r = e;
      for (std::size_t k = d; k-- > 0;) {
        tup[k] = r % a.dim();
        r /= a.dim();
      }
      std::vector<std::size_t> moved(d);
      std::vector<int> tp(d);
      for (std::size_t k = 0; k < d; ++k) {
        moved[k] = tup[s(k)];
        tp[k] = letter_par[tup[k]];
      }
      int sign = koszul_sign(tp, s.inverse());
      std::size_t moved_rank = 0;
      for (auto v : moved) moved_rank = moved_rank * a.dim() + v;
      Matrix lhs = rs.matrix() * act.matrices[e];
      Matrix rhs = act.matrices[moved_rank] * rs.matrix();
      if (sign < 0) rhs = rhs.scaled(-Scalar::one(f));
      if (!(lhs == rhs))
        throw std::logic_error("tensor action incompatible with the "
                               "place permutation");
    }
  }
  return act;
}

ModuleAction wreath_action(const ModuleAction& base, std::size_t d) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  ModuleAction part = tensor_module(base, d);
  TensorPower power(base.space, d);
  SuperAlgebra w = wreath(base.algebra, d);

  auto perms = Permutation::all(d);
  std::vector<Matrix> perm_mats;
  perm_mats.reserve(perms.size());
  for (const auto& s : perms)
    perm_mats.push_back(permutation_action(power, s).matrix());

  const std::size_t block = part.algebra.dim();
  std::vector<Matrix> mats;
  mats.reserve(w.dim());
  for (std::size_t p = 0; p < perms.size(); ++p)
    for (std::size_t r = 0; r < block; ++r)
      // v.(sigma (x) a) = (v.sigma).a
      mats.push_back(part.matrices[r] * perm_mats[p]);

  ModuleAction act{std::move(w), power.space(), Side::right, std::move(mats)};
  act.audit();  // exhaustive pairs through W(3); sampled beyond
  return act;
}

ModuleAction sergeev_action(std::size_t n, std::size_t d, const Field& f) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
  ModuleAction act = wreath_action(u1_module(n, Side::right, f), d);
  act.algebra = act.algebra.renamed("W(" + std::to_string(d) + ")");
  return act;
}

ModuleAction sym_group_action_module(std::size_t m, std::size_t n,
                                     std::size_t d, const Field& f) {
  if (d < 1) throw std::invalid_argument("need d >= 1");
  SuperSpace base = SuperSpace::boxed(f, m, n);
  TensorPower power(base, d);
  SuperAlgebra ks = group_algebra(d, f);
  auto perms = Permutation::all(d);
  std::vector<Matrix> mats;
  mats.reserve(perms.size());
  for (const auto& s : perms)
    mats.push_back(permutation_action(power, s).matrix());
  ModuleAction act{std::move(ks), power.space(), Side::right, std::move(mats)};
  act.audit();
  return act;
}

}  // namespace superschur
