#include "doctest.h"
#include "superschur/gamma_hom.hpp"

#include <random>

using namespace superschur;

namespace {

const Field Q = Field::rationals();
const Field G3 = Field::gf(3);

}  // namespace

TEST_CASE("gamma hom dimensions match the Schur superalgebras") {
  for (const Field& f : {Q, G3}) {
    // B = k, V = W = k^{1|1}, d = 2: dim 8 = dim S(1|1,2)
    ModuleAction v = trivial_module(SuperSpace::boxed(f, 1, 1));
    GammaHom g = gamma_hom(v, v, 2);
    CHECK(g.count() == 8);
    CHECK(g.count() == schur_I(1, 1, 2, f).dim());

    // B = C(1), V = W = U(1), d = 2: dim 2 = dim Q(1,2)
    ModuleAction u = u1_module(1, Side::right, f);
    GammaHom gq = gamma_hom(u, u, 2);
    CHECK(gq.count() == 2);
    CHECK(gq.count() == schur_II(1, 2, f).dim());

    // B = C(1), V = U(1), W = U(1)^{(+)2}, d = 1: sdim (2,2)
    ModuleAction u2 = u1_module(2, Side::right, f);
    GammaHom g12 = gamma_hom(u, u2, 1);
    CHECK(g12.count() == 4);
    std::size_t even = 0;
    for (int p : g12.parities) even += p == 0;
    CHECK(even == 2);
  }
}

TEST_CASE("gamma hom dimension equals the divided power formula") {
  for (std::size_t n : {1u, 2u})
    for (std::size_t d : {1u, 2u}) {
      ModuleAction u1 = u1_module(1, Side::right, Q);
      ModuleAction un = u1_module(n, Side::right, Q);
      GammaHom g = gamma_hom(u1, un, d);
      // Hom_{C(1)}(U(1), U(1)^{(+)n}) has sdim (n, n)
      CHECK(g.count() == gamma_dimension(n, n, d));
    }
}

TEST_CASE("gamma compose: identity, closure, associativity") {
  ModuleAction v = trivial_module(SuperSpace::boxed(Q, 1, 1));
  GammaHom g = gamma_hom(v, v, 2);

  Vec id = g.identity_coordinates();
  std::mt19937_64 rng(404);
  for (std::size_t i = 0; i < g.count(); ++i) {
    Vec e = zero_vec(Q, g.count());
    e[i] = Scalar::one(Q);
    CHECK(gamma_compose(g, id, g, e, g) == e);
    CHECK(gamma_compose(g, e, g, id, g) == e);
  }

  // associativity on random triples
  for (int trial = 0; trial < 10; ++trial) {
    auto rand_vec = [&] {
      Vec x = zero_vec(Q, g.count());
      for (auto& s : x)
        s = Scalar::of_int(Q, static_cast<long long>(rng() % 5) - 2);
      return x;
    };
    Vec a = rand_vec(), b = rand_vec(), c = rand_vec();
    Vec ab_c = gamma_compose(g, gamma_compose(g, a, g, b, g), g, c, g);
    Vec a_bc = gamma_compose(g, a, g, gamma_compose(g, b, g, c, g), g);
    CHECK(ab_c == a_bc);
  }
}

TEST_CASE("endomorphism gamma hom reconstructs the Schur tables exactly") {
  for (const Field& f : {Q, G3}) {
    // type I at (1|1, d=2) and type II at (n=1, d=2)
    {
      ModuleAction v = trivial_module(SuperSpace::boxed(f, 1, 1));
      GammaHom g = gamma_hom(v, v, 2);
      Commutant c = hom_over_algebra(
          sym_group_action_module(1, 1, 2, f),
          sym_group_action_module(1, 1, 2, f), group_algebra_generators(2));
      SuperAlgebra s = schur_I(1, 1, 2, f);
      std::vector<Vec> flats;
      for (const auto& m : c.basis) flats.push_back(m.flatten());
      SolveEngine engine(Matrix::from_columns(
          f, v.space.dim() * v.space.dim() * 4, flats));
      for (std::size_t i = 0; i < c.count(); ++i)
        for (std::size_t j = 0; j < c.count(); ++j) {
          // product through the gamma machinery, certified invariant
          auto gi = g.coordinates(c.basis[i]);
          auto gj = g.coordinates(c.basis[j]);
          REQUIRE(gi);
          REQUIRE(gj);
          Vec prod_coords = gamma_compose(g, *gi, g, *gj, g);
          Matrix prod = g.realize(prod_coords);
          // and in the Schur basis it matches the audited table
          auto in_schur = engine.solve(prod.flatten());
          REQUIRE(in_schur);
          Vec table = zero_vec(f, c.count());
          for (const auto& [k, coeff] : s.product(i, j)) table[k] += coeff;
          CHECK(*in_schur == table);
        }
    }
    {
      ModuleAction u = u1_module(1, Side::right, f);
      GammaHom g = gamma_hom(u, u, 2);
      ModuleAction act = sergeev_action(1, 2, f);
      Commutant c =
          hom_over_algebra(act, act, wreath_generators(clifford(1, f), 2));
      SuperAlgebra q = schur_II(1, 2, f);
      std::vector<Vec> flats;
      for (const auto& m : c.basis) flats.push_back(m.flatten());
      SolveEngine engine(Matrix::from_columns(f, 16, flats));
      for (std::size_t i = 0; i < c.count(); ++i)
        for (std::size_t j = 0; j < c.count(); ++j) {
          auto gi = g.coordinates(c.basis[i]);
          auto gj = g.coordinates(c.basis[j]);
          REQUIRE(gi);
          REQUIRE(gj);
          Matrix prod = g.realize(gamma_compose(g, *gi, g, *gj, g));
          auto in_schur = engine.solve(prod.flatten());
          REQUIRE(in_schur);
          Vec table = zero_vec(f, c.count());
          for (const auto& [k, coeff] : q.product(i, j)) table[k] += coeff;
          CHECK(*in_schur == table);
        }
    }
  }
}

TEST_CASE("surjectivity of composition through a large enough middle object") {
  for (const Field& f : {Q, G3}) {
    // B = C(1), V = W = U(1), P = U(1)^{(+)2}, d = 2
    ModuleAction v = u1_module(1, Side::right, f);
    ModuleAction p = u1_module(2, Side::right, f);
    auto rep = surjectivity_report(v, p, v, 2);
    CHECK(rep.target_dim == 2);
    CHECK(rep.rank == 2);
    CHECK(rep.surjective);

    // B = k, V = W = k^{1|1}, P = k^{2|2}, d = 2
    ModuleAction vk = trivial_module(SuperSpace::boxed(f, 1, 1));
    ModuleAction pk = trivial_module(SuperSpace::boxed(f, 2, 2));
    auto repk = surjectivity_report(vk, pk, vk, 2);
    CHECK(repk.target_dim == 8);
    CHECK(repk.rank == 8);
    CHECK(repk.surjective);
  }

  // V = W = P: the identity factors, always surjective
  ModuleAction u = u1_module(1, Side::right, Q);
  CHECK(surjectivity_report(u, u, u, 2).surjective);
}

TEST_CASE("restriction functor: Gamma^d_Q inside Gamma^d_M") {
  auto r11 = restriction_functor_check(1, 1, Q);
  CHECK(r11.q_dim == 2);
  CHECK(r11.m_dim == 4);
  CHECK(r11.passed());
  CHECK(r11.pi_self_dual_sdim);

  auto r12 = restriction_functor_check(1, 2, Q);
  CHECK(r12.q_dim == 2);
  CHECK(r12.m_dim == 8);
  CHECK(r12.passed());

  auto r21 = restriction_functor_check(2, 1, G3);
  CHECK(r21.q_dim == 8);
  CHECK(r21.m_dim == 16);
  CHECK(r21.passed());
}

TEST_CASE("gamma hom rejects unsupported algebras") {
  ModuleAction big{clifford(2, Q), SuperSpace::boxed(Q, 2, 2), Side::right,
                   {}};
  CHECK_THROWS_AS(gamma_hom(big, big, 1), std::invalid_argument);
}
