#include "doctest.h"
#include "superschur/supermap.hpp"
#include "superschur/tensor_power.hpp"

#include <random>

using namespace superschur;

namespace {

const Field Q = Field::rationals();

SuperMap random_homogeneous(const SuperSpace& src, const SuperSpace& tgt,
                            int parity, std::mt19937_64& rng) {
  SuperMap m = SuperMap::zero(src, tgt);
  for (std::size_t r = 0; r < tgt.dim(); ++r)
    for (std::size_t c = 0; c < src.dim(); ++c)
      if (m.entry_parity(r, c) == parity)
        m.at(r, c) =
            Scalar::of_int(src.field(), static_cast<long long>(rng() % 7) - 3);
  return m;
}

// independent elementwise oracle for f (x) g on pair indices
Scalar boxtimes_oracle_entry(const SuperMap& f, const SuperMap& g,
                             std::size_t r1, std::size_t r2, std::size_t c1,
                             std::size_t c2) {
  Scalar v = f.at(r1, c1) * g.at(r2, c2);
  if (g.entry_parity(r2, c2) == 1 && f.source().parity(c1) == 1) v = -v;
  return v;
}

}  // namespace

TEST_CASE("space constructions and sdims") {
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  CHECK(m11.sdim() == SDim{1, 1});
  CHECK(SuperSpace::boxed(Field::gf(3), 0, 0).dim() == 0);
  SuperSpace m23 = SuperSpace::boxed(Q, 2, 3);
  CHECK(m23.sdim() == SDim{2, 3});
  CHECK(m23.dim() == 5);

  CHECK(direct_sum(SuperSpace::boxed(Q, 1, 0), SuperSpace::boxed(Q, 0, 1))
            .space.sdim() == SDim{1, 1});
  CHECK(direct_sum(m11, m11).space.sdim() == SDim{2, 2});
  SpacePerm with_zero = direct_sum(m23, SuperSpace::boxed(Q, 0, 0));
  CHECK(with_zero.space.sdim() == m23.sdim());
  for (std::size_t i = 0; i < m23.dim(); ++i)
    CHECK(with_zero.to_canonical[i] == i);  // identity witness

  CHECK(tensor_product_space(m11, m11).space.sdim() == SDim{2, 2});
  CHECK(tensor_product_space(SuperSpace::boxed(Q, 0, 1),
                             SuperSpace::boxed(Q, 0, 1))
            .space.sdim() == SDim{1, 0});  // odd*odd = even
  CHECK(tensor_product_space(m23, SuperSpace::boxed(Q, 1, 0)).space.sdim() ==
        m23.sdim());

  CHECK(parity_change(m23).space.sdim() == SDim{3, 2});
  // an involution: the double parity change is identical to M, labels and all
  CHECK(parity_change(parity_change(m23).space).space == m23);
  CHECK(parity_change(SuperSpace::boxed(Q, 0, 0)).space.dim() == 0);

  // canonical inclusions into the direct sum: even, injective, joint spans
  SpacePerm sum = direct_sum(SuperSpace::boxed(Q, 1, 1), m23);
  auto [inl, inr] = direct_sum_inclusions(SuperSpace::boxed(Q, 1, 1), m23);
  CHECK(inl.homogeneous_parity() == 0);
  CHECK(inr.homogeneous_parity() == 0);
  CHECK(inl.matrix().rank() == 2);
  CHECK(inr.matrix().rank() == 5);
  Matrix joint(Q, sum.space.dim(), 7);
  for (std::size_t r = 0; r < sum.space.dim(); ++r) {
    for (std::size_t c = 0; c < 2; ++c) joint.at(r, c) = inl.at(r, c);
    for (std::size_t c = 0; c < 5; ++c) joint.at(r, 2 + c) = inr.at(r, c);
  }
  CHECK(joint.rank() == 7);

  CHECK(dual_space(SuperSpace::boxed(Q, 1, 2)).sdim() == SDim{1, 2});
  CHECK(dual_space(SuperSpace::boxed(Q, 0, 0)).dim() == 0);

  CHECK(hom_space(m11, m11).space.sdim() == SDim{2, 2});
  CHECK(hom_space(m23, SuperSpace::boxed(Q, 1, 0)).space.sdim() ==
        dual_space(m23).sdim());
  CHECK(hom_space(SuperSpace::boxed(Q, 1, 0), SuperSpace::boxed(Q, 0, 1))
            .space.sdim() == SDim{0, 1});
}

TEST_CASE("hom space dimension formula") {
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t m2 = 0; m2 <= 2; ++m2)
        for (std::size_t n2 = 0; n2 <= 2; ++n2) {
          SuperSpace a = SuperSpace::boxed(Q, m, n);
          SuperSpace b = SuperSpace::boxed(Q, m2, n2);
          SDim s = hom_space(a, b).space.sdim();
          CHECK(s.even == m * m2 + n * n2);
          CHECK(s.odd == m * n2 + n * m2);
        }
}

TEST_CASE("compose basics") {
  SuperSpace m30 = SuperSpace::boxed(Q, 3, 0);
  SuperMap e32 = SuperMap::unit(m30, m30, 2, 1);
  SuperMap e21 = SuperMap::unit(m30, m30, 1, 0);
  CHECK(compose(e32, e21) == SuperMap::unit(m30, m30, 2, 0));
  CHECK(compose(e32, SuperMap::identity(m30)) == e32);

  // odd compose odd lands in the even part
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  std::mt19937_64 rng(5);
  SuperMap f = random_homogeneous(m11, m11, 1, rng);
  SuperMap g = random_homogeneous(m11, m11, 1, rng);
  CHECK(compose(f, g).homogeneous_parity() == 0);
}

TEST_CASE("boxtimes sign and interchange law") {
  std::mt19937_64 rng(2024);
  SuperSpace line = SuperSpace::boxed(Q, 0, 1);
  SuperSpace even_line = SuperSpace::boxed(Q, 1, 0);
  // both odd on k^{0|1} (landing in k^{1|0}):
  // (f (x) g)(v (x) v) = -(f v) (x) (g v)
  SuperMap f = SuperMap::unit(line, even_line, 0, 0);
  SuperMap g = SuperMap::unit(line, even_line, 0, 0);
  REQUIRE(f.homogeneous_parity() == 1);
  SuperMap fg = boxtimes(f, g);
  CHECK(fg.at(0, 0) == -(f.at(0, 0) * g.at(0, 0)));

  // elementwise oracle on random shapes
  for (int trial = 0; trial < 20; ++trial) {
    SuperSpace a = SuperSpace::boxed(Q, 1 + rng() % 2, rng() % 2);
    SuperSpace b = SuperSpace::boxed(Q, rng() % 2, 1 + rng() % 2);
    SuperMap x = random_homogeneous(a, b, rng() % 2, rng);
    SuperMap y = random_homogeneous(b, a, rng() % 2, rng);
    SuperMap t = boxtimes(x, y);
    SpacePerm src = tensor_product_space(x.source(), y.source());
    SpacePerm tgt = tensor_product_space(x.target(), y.target());
    for (std::size_t r1 = 0; r1 < x.target().dim(); ++r1)
      for (std::size_t r2 = 0; r2 < y.target().dim(); ++r2)
        for (std::size_t c1 = 0; c1 < x.source().dim(); ++c1)
          for (std::size_t c2 = 0; c2 < y.source().dim(); ++c2)
            CHECK(t.at(tgt.to_canonical[r1 * y.target().dim() + r2],
                       src.to_canonical[c1 * y.source().dim() + c2]) ==
                  boxtimes_oracle_entry(x, y, r1, r2, c1, c2));
  }

  // interchange: (f (x) g) o (f' (x) g') = (-1)^{|g||f'|} (ff') (x) (gg')
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  int checked = 0;
  while (checked < 120) {
    int pf = rng() % 2, pg = rng() % 2, pf2 = rng() % 2, pg2 = rng() % 2;
    SuperMap f1 = random_homogeneous(m11, m11, pf, rng);
    SuperMap g1 = random_homogeneous(m11, m11, pg, rng);
    SuperMap f2 = random_homogeneous(m11, m11, pf2, rng);
    SuperMap g2 = random_homogeneous(m11, m11, pg2, rng);
    SuperMap lhs = compose(boxtimes(f1, g1), boxtimes(f2, g2));
    SuperMap rhs = boxtimes(compose(f1, f2), compose(g1, g2));
    if (pg == 1 && pf2 == 1) rhs = rhs.scaled(-Scalar::one(Q));
    CHECK(lhs == rhs);
    ++checked;
  }
}

TEST_CASE("boxtimes_many: identity, nesting, odd sign") {
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  std::vector<SuperMap> ids(3, SuperMap::identity(m11));
  SuperMap flat = boxtimes_many(ids, Q);
  CHECK(flat.matrix() == Matrix::identity(Q, 8));

  // three odd maps out of k^{0|1}: sign on v (x) v (x) v is (-1)^{0+1+2} = -1
  SuperSpace line = SuperSpace::boxed(Q, 0, 1);
  SuperSpace even_line = SuperSpace::boxed(Q, 1, 0);
  SuperMap odd = SuperMap::unit(line, even_line, 0, 0);
  REQUIRE(odd.homogeneous_parity() == 1);
  SuperMap cubed = boxtimes_many({odd, odd, odd}, Q);
  CHECK(cubed.at(0, 0) == -Scalar::one(Q));

  // left-nested vs right-nested vs flat, on random maps, d = 3
  std::mt19937_64 rng(77);
  std::vector<SuperMap> maps;
  for (int k = 0; k < 3; ++k) {
    SuperMap m = random_homogeneous(m11, m11, 0, rng);
    SuperMap o = random_homogeneous(m11, m11, 1, rng);
    maps.push_back(m + o);
  }
  SuperMap flat3 = boxtimes_many(maps, Q);
  SuperMap left = boxtimes(boxtimes(maps[0], maps[1]), maps[2]);
  SuperMap right = boxtimes(maps[0], boxtimes(maps[1], maps[2]));

  TensorPower power(m11, 3);
  SpacePerm p01 = tensor_product_space(m11, m11);
  SpacePerm left_pair = tensor_product_space(p01.space, m11);
  SpacePerm p12 = tensor_product_space(m11, m11);
  SpacePerm right_pair = tensor_product_space(m11, p12.space);
  const std::size_t n = m11.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i2 = 0; i2 < n; ++i2)
          for (std::size_t j2 = 0; j2 < n; ++j2)
            for (std::size_t k2 = 0; k2 < n; ++k2) {
              std::size_t fr = power.encode(std::vector<std::size_t>{i, j, k});
              std::size_t fc =
                  power.encode(std::vector<std::size_t>{i2, j2, k2});
              std::size_t lr =
                  left_pair.to_canonical[p01.to_canonical[i * n + j] * n + k];
              std::size_t lc = left_pair.to_canonical
                                   [p01.to_canonical[i2 * n + j2] * n + k2];
              std::size_t rr =
                  right_pair
                      .to_canonical[i * n * n + p12.to_canonical[j * n + k]];
              std::size_t rc =
                  right_pair.to_canonical[i2 * n * n +
                                          p12.to_canonical[j2 * n + k2]];
              CHECK(flat3.at(fr, fc) == left.at(lr, lc));
              CHECK(flat3.at(fr, fc) == right.at(rr, rc));
            }

  // d = 0: the scalar identity on the one dimensional even space
  SuperMap empty = boxtimes_many(std::vector<SuperMap>{}, Q);
  CHECK(empty.matrix() == Matrix::identity(Q, 1));
}

TEST_CASE("dual map: defining sign, contravariance, naturality") {
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  CHECK(dual_map(SuperMap::identity(m11)).matrix() == Matrix::identity(Q, 2));

  // odd phi, odd dual vector f: <phi^(f), v> = -<f, phi(v)>
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    SuperMap phi = random_homogeneous(m11, m11, rng() % 2, rng);
    SuperMap dual = dual_map(phi);
    int q = *phi.homogeneous_parity();
    // evaluate both sides of the defining identity on dual-basis pairs
    for (std::size_t w = 0; w < 2; ++w)
      for (std::size_t v = 0; v < 2; ++v) {
        Scalar lhs = dual.at(v, w);  // <phi^(d_w), e_v>
        Scalar rhs = phi.at(w, v);   // <d_w, phi(e_v)>
        if (q == 1 && m11.parity(w) == 1) rhs = -rhs;
        CHECK(lhs == rhs);
      }
  }

  // (psi phi)^ = (-1)^{|psi||phi|} phi^ psi^ for homogeneous inputs
  for (int trial = 0; trial < 60; ++trial) {
    int qp = rng() % 2, qf = rng() % 2;
    SuperMap psi = random_homogeneous(m11, m11, qp, rng);
    SuperMap phi = random_homogeneous(m11, m11, qf, rng);
    SuperMap lhs = dual_map(compose(psi, phi));
    SuperMap rhs = compose(dual_map(phi), dual_map(psi));
    if (qp == 1 && qf == 1) rhs = rhs.scaled(-Scalar::one(Q));
    CHECK(lhs == rhs);
  }

  // double dual: conjugating by the parity involution of the canonical
  // identification recovers f entrywise
  SuperSpace m21 = SuperSpace::boxed(Q, 2, 1);
  for (int trial = 0; trial < 40; ++trial) {
    SuperMap f = random_homogeneous(m21, m11, 0, rng) +
                 random_homogeneous(m21, m11, 1, rng);
    SuperMap dd = dual_map(dual_map(f));
    for (std::size_t r = 0; r < m11.dim(); ++r)
      for (std::size_t c = 0; c < m21.dim(); ++c) {
        Scalar expect = f.at(r, c);
        if ((m11.parity(r) + m21.parity(c)) % 2 == 1) expect = -expect;
        CHECK(dd.at(r, c) == expect);  // plain coordinates
        Scalar conj = dd.at(r, c);
        if (m11.parity(r) == 1) conj = -conj;
        if (m21.parity(c) == 1) conj = -conj;
        CHECK(conj == f.at(r, c));  // after the eq-dual identification
      }
  }
}

TEST_CASE("minus twist") {
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  std::mt19937_64 rng(13);
  SuperMap even = random_homogeneous(m11, m11, 0, rng);
  CHECK(minus_twist(even) == even);

  SuperMap e_oe = SuperMap::unit(m11, m11, 1, 0);  // odd row, even column
  SuperMap e_eo = SuperMap::unit(m11, m11, 0, 1);  // even row, odd column
  CHECK(minus_twist(e_oe) == e_oe);
  CHECK(minus_twist(e_eo) == e_eo.scaled(-Scalar::one(Q)));

  for (int trial = 0; trial < 40; ++trial) {
    SuperMap f = random_homogeneous(m11, m11, 0, rng) +
                 random_homogeneous(m11, m11, 1, rng);
    CHECK(minus_twist(minus_twist(f)) == f);
  }

  // (f o g)^- = (-1)^{|f||g|} f^- o g^-
  for (int trial = 0; trial < 60; ++trial) {
    int qf = rng() % 2, qg = rng() % 2;
    SuperMap f = random_homogeneous(m11, m11, qf, rng);
    SuperMap g = random_homogeneous(m11, m11, qg, rng);
    SuperMap lhs = minus_twist(compose(f, g));
    SuperMap rhs = compose(minus_twist(f), minus_twist(g));
    if (qf == 1 && qg == 1) rhs = rhs.scaled(-Scalar::one(Q));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("parity bookkeeping of the operations") {
  std::mt19937_64 rng(99);
  SuperSpace a = SuperSpace::boxed(Q, 1, 2);
  SuperSpace b = SuperSpace::boxed(Q, 2, 1);
  for (int qa : {0, 1})
    for (int qb : {0, 1}) {
      SuperMap f = random_homogeneous(a, b, qa, rng);
      SuperMap g = random_homogeneous(b, a, qb, rng);
      CHECK(compose(f, g).homogeneous_parity() == (qa + qb) % 2);
      CHECK(boxtimes(f, g).homogeneous_parity() == (qa + qb) % 2);
      CHECK(dual_map(f).homogeneous_parity() == qa);
      CHECK(minus_twist(f).homogeneous_parity() == qa);
    }
}

TEST_CASE("field mismatch and shape errors") {
  SuperSpace q = SuperSpace::boxed(Q, 1, 1);
  SuperSpace g = SuperSpace::boxed(Field::gf(3), 1, 1);
  CHECK_THROWS_AS(direct_sum(q, g), std::invalid_argument);
  CHECK_THROWS_AS(tensor_product_space(q, g), std::invalid_argument);
  CHECK_THROWS_AS(hom_space(q, g), std::invalid_argument);
  SuperSpace m30 = SuperSpace::boxed(Q, 3, 0);
  CHECK_THROWS_AS(compose(SuperMap::identity(q), SuperMap::identity(m30)),
                  std::invalid_argument);
}
