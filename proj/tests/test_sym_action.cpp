#include "doctest.h"
#include "superschur/sym_action.hpp"

#include <random>

using namespace superschur;

namespace {

const Field Q = Field::rationals();
const Field G3 = Field::gf(3);

// test-local binomial, independent of the library helper
unsigned long long binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

unsigned long long gamma_count_oracle(std::size_t m, std::size_t n,
                                      std::size_t d) {
  unsigned long long total = 0;
  for (std::size_t l = 0; l <= std::min(n, d); ++l) {
    std::size_t k = d - l;
    unsigned long long even = k == 0 ? 1 : (m == 0 ? 0 : binom(m + k - 1, k));
    total += even * binom(n, l);
  }
  return total;
}

bool vector_invariant(const GammaBasis& basis, const Vec& v) {
  for (std::size_t i = 0; i + 1 < basis.power.exponent(); ++i) {
    Permutation s = Permutation::transposition(basis.power.exponent(), i);
    if (basis.power.place_permute_vector(v, s) != v) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("transposition action: swaps, signs, involution") {
  // k^{1|0}, d=2: plain swap
  SuperMap s = transposition_action(SuperSpace::boxed(Q, 1, 0), 2, 0);
  CHECK(s.matrix() == Matrix::identity(Q, 1));

  // k^{0|1}, d=2: (v (x) v).s1 = -v (x) v
  SuperMap t = transposition_action(SuperSpace::boxed(Q, 0, 1), 2, 0);
  CHECK(t.at(0, 0) == -Scalar::one(Q));

  // involutions, several shapes and both fields
  for (const Field& f : {Q, G3})
    for (std::size_t d : {2u, 3u}) {
      TensorPower power(SuperSpace::boxed(f, 1, 1), d);
      for (std::size_t i = 0; i + 1 < d; ++i) {
        SuperMap a = transposition_action(power, i);
        CHECK(a.matrix() * a.matrix() ==
              Matrix::identity(f, power.dim()));
      }
    }
  TensorPower big(SuperSpace::boxed(Q, 2, 2), 3);  // 64x64 matrices
  for (std::size_t i = 0; i < 2; ++i) {
    SuperMap a = transposition_action(big, i);
    CHECK(a.matrix() * a.matrix() == Matrix::identity(Q, 64));
  }
  CHECK_THROWS_AS(transposition_action(big, 2), std::invalid_argument);
}

TEST_CASE("permutation action: words, homomorphism, closed formula") {
  TensorPower power(SuperSpace::boxed(Q, 1, 1), 3);
  CHECK(permutation_action(power, Permutation(3)).matrix() ==
        Matrix::identity(Q, 8));

  // two reduced words for the longest element: s0 s1 s0 = s1 s0 s1
  Permutation longest({2, 1, 0});
  SuperMap t0 = transposition_action(power, 0);
  SuperMap t1 = transposition_action(power, 1);
  SuperMap word_a = compose(t0, compose(t1, t0));  // apply s0, s1, s0
  SuperMap word_b = compose(t1, compose(t0, t1));  // apply s1, s0, s1
  CHECK(word_a == word_b);
  CHECK(permutation_action(power, longest) == word_a);
  // and the 3-cycle against its bubble-sort word, composed by hand
  Permutation cycle({1, 2, 0});
  CHECK(permutation_action(power, cycle) == compose(t1, t0));

  // right action homomorphism with classical composition:
  // R(sigma o tau) = R(tau) R(sigma), where (sigma o tau)(x) = sigma(tau(x))
  std::mt19937_64 rng(17);
  auto all3 = Permutation::all(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Permutation& a = all3[rng() % 6];
    const Permutation& b = all3[rng() % 6];
    CHECK(permutation_action(power, b.then(a)).matrix() ==
          permutation_action(power, b).matrix() *
              permutation_action(power, a).matrix());
  }

  // the word-based action agrees with the closed inversion-sign formula
  for (const auto& sigma : all3) {
    SuperMap act = permutation_action(power, sigma);
    for (std::size_t pos = 0; pos < power.dim(); ++pos) {
      Vec e = zero_vec(Q, power.dim());
      e[pos] = Scalar::one(Q);
      CHECK(act.matrix().column(pos) ==
            power.place_permute_vector(e, sigma));
    }
  }
}

TEST_CASE("gamma invariants: frozen examples") {
  CHECK(gamma_invariants(SuperSpace::boxed(Q, 0, 1), 2).count() == 0);
  CHECK(gamma_invariants(SuperSpace::boxed(Q, 1, 1), 2).count() == 2);
  CHECK(gamma_invariants(SuperSpace::boxed(Q, 2, 2), 2).count() == 8);
  CHECK(gamma_invariants(SuperSpace::boxed(G3, 2, 2), 2).count() == 8);
  CHECK(gamma_dimension(2, 2, 2) == 8);  // 3 + 4 + 1

  // labels of Gamma^2(k^{1|1}): (e1^2) and (e1, e'1)
  GammaBasis g = gamma_invariants(SuperSpace::boxed(Q, 1, 1), 2);
  REQUIRE(g.labels.size() == 2);
  CHECK(g.labels[0].even == std::vector<std::pair<std::size_t, std::size_t>>{
                                {0, 2}});
  CHECK(g.labels[0].odd.empty());
  CHECK(g.labels[1].even == std::vector<std::pair<std::size_t, std::size_t>>{
                                {0, 1}});
  CHECK(g.labels[1].odd == std::vector<std::size_t>{1});
  // e1 (x) e'1 + e'1 (x) e1, no sign
  TensorPower& p = g.power;
  Vec expect = zero_vec(Q, 4);
  expect[p.encode(std::vector<std::size_t>{0, 1})] = Scalar::one(Q);
  expect[p.encode(std::vector<std::size_t>{1, 0})] = Scalar::one(Q);
  CHECK(g.vectors[1] == expect);
}

TEST_CASE("gamma dimension formula sweep, both fields") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for (std::size_t d = 0; d <= 4; ++d) {
        if (m + n == 0) continue;
        unsigned long long want = gamma_count_oracle(m, n, d);
        CHECK(gamma_dimension(m, n, d) == want);
        std::size_t power_dim = 1;
        for (std::size_t k = 0; k < d; ++k) power_dim *= m + n;
        for (const Field& f : {Q, G3}) {
          // kernel cross-check within budget; orbit route alone above it
          std::size_t budget = f.is_rational() ? 300 : 700;
          SuperSpace space = SuperSpace::boxed(f, m, n);
          GammaBasis g = power_dim <= budget ? gamma_invariants(space, d)
                                             : gamma_orbit_basis(space, d);
          CHECK(g.count() == want);
          if (power_dim > budget) {
            for (const Vec& v : g.vectors) CHECK(vector_invariant(g, v));
            CHECK(span_rank(f, g.power.dim(), g.vectors) == g.count());
          }
        }
      }
}

TEST_CASE("gamma orbit vectors are invariant and independent, larger shapes") {
  // shapes where the kernel cross-check inside gamma_invariants is cheap
  for (const Field& f : {Q, G3}) {
    for (auto [m, n, d] : std::initializer_list<std::array<std::size_t, 3>>{
             {2, 2, 3}, {1, 2, 4}, {3, 1, 3}, {0, 3, 3}, {3, 0, 4}}) {
      GammaBasis g = gamma_invariants(SuperSpace::boxed(f, m, n), d);
      CHECK(g.count() == gamma_count_oracle(m, n, d));
      for (const Vec& v : g.vectors) CHECK(vector_invariant(g, v));
      CHECK(span_rank(f, g.power.dim(), g.vectors) == g.count());
    }
  }
}

TEST_CASE("symmetric power: frozen examples and well-definedness") {
  CHECK(symmetric_power(SuperSpace::boxed(Q, 0, 1), 2).count() == 0);
  CHECK(symmetric_power(SuperSpace::boxed(Q, 1, 1), 2).count() == 2);
  CHECK(symmetric_power(SuperSpace::boxed(Q, 2, 0), 3).count() == 4);
  CHECK(symmetric_power(SuperSpace::boxed(G3, 2, 0), 3).count() == 4);

  // sorting sign: e'2 (x) e'1 = - e'1 (x) e'2 in S^2(k^{0|2})
  SymmetricBasis s = symmetric_power(SuperSpace::boxed(Q, 0, 2), 2);
  REQUIRE(s.count() == 1);
  std::size_t straight = s.power.encode(std::vector<std::size_t>{0, 1});
  std::size_t crossed = s.power.encode(std::vector<std::size_t>{1, 0});
  CHECK(s.quotient.at(0, straight) == Scalar::one(Q));
  CHECK(s.quotient.at(0, crossed) == -Scalar::one(Q));
}

TEST_CASE("symmetric and divided counts agree under duality") {
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t d = 1; d <= 3; ++d) {
        if (m + n == 0) continue;
        SuperSpace space = SuperSpace::boxed(Q, m, n);
        CHECK(symmetric_power(dual_space(space), d).count() ==
              gamma_invariants(space, d).count());
      }
}

TEST_CASE("char p: divided and symmetric powers genuinely differ at d >= p") {
  // composite Gamma^3 -> tensor -> S^3 for k^{2|0}: the orbit sum of the
  // label (e1^2 e2) has 3 arrangements, and 3 = 0 over GF(3)
  SuperSpace q2 = SuperSpace::boxed(Q, 2, 0);
  SuperSpace g2 = SuperSpace::boxed(G3, 2, 0);
  for (const SuperSpace* space : {&q2, &g2}) {
    GammaBasis g = gamma_invariants(*space, 3);
    SymmetricBasis s = symmetric_power(*space, 3);
    Matrix composite = s.quotient * g.embedding();
    if (space->field().is_rational())
      CHECK(composite.rank() == g.count());
    else
      CHECK(composite.rank() < g.count());
  }
}

TEST_CASE("gamma power embeds in the product of smaller gamma powers") {
  for (const Field& f : {Q, G3}) {
    CHECK(gamma_embedding_check(SuperSpace::boxed(f, 1, 1), 1, 1));
    CHECK(gamma_embedding_check(SuperSpace::boxed(f, 1, 1), 1, 2));
    CHECK(gamma_embedding_check(SuperSpace::boxed(f, 2, 1), 2, 1));
    CHECK(gamma_embedding_check(SuperSpace::boxed(f, 0, 2), 1, 1));
  }
}

TEST_CASE("exponential decomposition") {
  // N = 0: identity change of basis
  SuperSpace m11 = SuperSpace::boxed(Q, 1, 1);
  auto dec0 = exponential_decomposition(m11, SuperSpace::boxed(Q, 0, 0), 2);
  CHECK(dec0.change_of_basis == Matrix::identity(Q, 2));

  // M = N = k^{1|0}, d = 2: 3 = 1 + 1 + 1
  auto dec1 = exponential_decomposition(SuperSpace::boxed(Q, 1, 0),
                                        SuperSpace::boxed(Q, 1, 0), 2);
  CHECK(dec1.whole.count() == 3);
  std::size_t total = 0;
  for (const auto& [l, r] : dec1.pieces) total += l.count() * r.count();
  CHECK(total == 3);

  // M = N = k^{1|1}, d = 2: 8 = 2 + 4 + 2
  for (const Field& f : {Q, G3}) {
    auto dec2 = exponential_decomposition(SuperSpace::boxed(f, 1, 1),
                                          SuperSpace::boxed(f, 1, 1), 2);
    CHECK(dec2.whole.count() == 8);
    std::vector<std::size_t> sizes;
    for (const auto& [l, r] : dec2.pieces) sizes.push_back(l.count() * r.count());
    CHECK(sizes == std::vector<std::size_t>{2, 4, 2});
    CHECK(dec2.change_of_basis.rank() == 8);
  }
}
