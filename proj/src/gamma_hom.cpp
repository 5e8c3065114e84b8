#include "superschur/gamma_hom.hpp"

#include <stdexcept>

namespace superschur {

namespace {

std::vector<std::size_t> algebra_generators(const ModuleAction& m,
                                            std::size_t d) {
  // wreath over the base algebra: s_i (x) 1 and single-slot generators
  return wreath_generators(m.algebra, d);
}

}  // namespace

std::optional<Vec> GammaHom::coordinates(const Matrix& map) const {
  return coords.solve(map.flatten());
}

Matrix GammaHom::realize(const Vec& coefficients) const {
  if (coefficients.size() != realized.size())
    throw std::invalid_argument("coefficient count mismatch");
  Matrix out(source_power.base().field(), target_power.dim(),
             source_power.dim());
  for (std::size_t i = 0; i < realized.size(); ++i)
    if (!coefficients[i].is_zero())
      out = out + realized[i].scaled(coefficients[i]);
  return out;
}

Vec GammaHom::identity_coordinates() const {
  if (!(source_power.space() == target_power.space()))
    throw std::logic_error("identity needs an endomorphism gamma-hom");
  auto c = coordinates(
      Matrix::identity(source_power.base().field(), source_power.dim()));
  if (!c) throw std::logic_error("id^(x)d is not in the invariant span");
  return *c;
}

GammaHom gamma_hom(const ModuleAction& v, const ModuleAction& w,
                   std::size_t d) {
  const Field& f = v.space.field();
  if (v.algebra.dim() > 2)
    throw std::invalid_argument("gamma_hom supports B = k or C(1)");
  Commutant hom = hom_over_algebra(v, w);
  SuperSpace hom_superspace = hom.as_superspace();
  GammaBasis gamma = gamma_invariants(hom_superspace, d);
  TensorPower source_power(v.space, d);
  TensorPower target_power(w.space, d);

  // realize each basis tensor of the hom power that occurs, then each
  // invariant vector as a sum
  std::vector<std::optional<Matrix>> tensor_cache(gamma.power.dim());
  auto realized_tensor = [&](std::size_t pos) -> const Matrix& {
    if (!tensor_cache[pos]) {
      auto idx = gamma.power.decode(pos);
      std::vector<SuperMap> factors;
      factors.reserve(d);
      for (std::size_t k = 0; k < d; ++k)
        factors.push_back(
            SuperMap(v.space, w.space, hom.basis[idx[k]]));
      tensor_cache[pos] =
          boxtimes_many(factors, source_power, target_power).matrix();
    }
    return *tensor_cache[pos];
  };

  std::vector<Matrix> realized;
  std::vector<int> parities;
  for (std::size_t j = 0; j < gamma.count(); ++j) {
    Matrix m(f, target_power.dim(), source_power.dim());
    const Vec& vec = gamma.vectors[j];
    for (std::size_t pos = 0; pos < vec.size(); ++pos)
      if (!vec[pos].is_zero())
        m = m + realized_tensor(pos).scaled(vec[pos]);
    realized.push_back(std::move(m));
    parities.push_back(gamma.parity(j));
  }

  // cross-check: the direct commutant over B wr S_d spans the same subspace
  ModuleAction wv = wreath_action(v, d);
  ModuleAction ww = wreath_action(w, d);
  Commutant direct = hom_over_algebra(wv, ww, algebra_generators(v, d));
  std::vector<Vec> realized_flat, direct_flat;
  for (const auto& m : realized) realized_flat.push_back(m.flatten());
  for (const auto& m : direct.basis) direct_flat.push_back(m.flatten());
  const std::size_t ambient = source_power.dim() * target_power.dim();
  if (realized.size() != direct.basis.size() ||
      span_rank(f, ambient, realized_flat) != realized.size() ||
      !same_span(f, ambient, realized_flat, direct_flat))
    throw std::logic_error(
        "realized invariants disagree with the wreath commutant");

  SolveEngine coords(
      Matrix::from_columns(f, ambient, realized_flat));
  return GammaHom{d,
                  std::move(hom),
                  std::move(gamma),
                  std::move(source_power),
                  std::move(target_power),
                  std::move(realized),
                  std::move(parities),
                  std::move(coords)};
}

Vec gamma_compose(const GammaHom& gpw, const Vec& g, const GammaHom& gvp,
                  const Vec& f, const GammaHom& gvw) {
  if (!(gvp.target_power.space() == gpw.source_power.space()))
    throw std::invalid_argument("gamma_compose: middle object mismatch");
  Matrix composed = gpw.realize(g) * gvp.realize(f);
  auto coords = gvw.coordinates(composed);
  if (!coords)
    throw std::logic_error("composition escapes the invariant subspace");
  return *coords;
}

SurjectivityReport surjectivity_report(const ModuleAction& v,
                                       const ModuleAction& p,
                                       const ModuleAction& w, std::size_t d) {
  const Field& f = v.space.field();
  GammaHom gvp = gamma_hom(v, p, d);
  GammaHom gpw = gamma_hom(p, w, d);
  GammaHom gvw = gamma_hom(v, w, d);

  std::vector<Vec> images;
  for (std::size_t gi = 0; gi < gpw.count(); ++gi)
    for (std::size_t fi = 0; fi < gvp.count(); ++fi) {
      Matrix composed = gpw.realized[gi] * gvp.realized[fi];
      auto coords = gvw.coordinates(composed);
      if (!coords)
        throw std::logic_error("composition escapes the invariant subspace");
      images.push_back(std::move(*coords));
    }
  SurjectivityReport rep;
  rep.target_dim = gvw.count();
  rep.rank = span_rank(f, gvw.count(), images);
  rep.surjective = rep.rank == rep.target_dim;
  return rep;
}

RestrictionReport restriction_functor_check(std::size_t n, std::size_t d,
                                            const Field& f) {
  ModuleAction q_mod = u1_module(n, Side::right, f);
  ModuleAction m_mod = trivial_module(q_mod.space);
  GammaHom gq = gamma_hom(q_mod, q_mod, d);
  GammaHom gm = gamma_hom(m_mod, m_mod, d);

  RestrictionReport rep;
  rep.q_dim = gq.count();
  rep.m_dim = gm.count();
  rep.pi_self_dual_sdim = q_mod.space.sdim().even == q_mod.space.sdim().odd;

  rep.inclusion = true;
  for (const auto& m : gq.realized)
    if (!gm.coordinates(m)) rep.inclusion = false;

  Matrix id = Matrix::identity(f, gq.source_power.dim());
  rep.identity_matches =
      gq.coordinates(id).has_value() && gm.coordinates(id).has_value();

  // products of Q-side elements, re-expressed through both coordinate
  // systems, must reconstruct the same map
  rep.composition_agrees = true;
  for (std::size_t i = 0; i < gq.count() && rep.composition_agrees; ++i)
    for (std::size_t j = 0; j < gq.count(); ++j) {
      Matrix prod = gq.realized[i] * gq.realized[j];
      auto qc = gq.coordinates(prod);
      auto mc = gm.coordinates(prod);
      if (!qc || !mc || !(gq.realize(*qc) == gm.realize(*mc))) {
        rep.composition_agrees = false;
        break;
      }
    }
  return rep;
}

}  // namespace superschur
