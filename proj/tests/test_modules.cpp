#include "doctest.h"
#include "superschur/centralizer.hpp"
#include "superschur/duality.hpp"
#include "superschur/supermap.hpp"

using namespace superschur;

namespace {

const Field Q = Field::rationals();

// eq-style block forms of C(1)-module homomorphisms on sdim (m,m) -> (n,n):
// right modules [[A,B],[B,A]], left modules [[A,B],[-B,A]]
bool right_block_form(const Matrix& x, std::size_t m, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (x.at(r, c) != x.at(n + r, m + c)) return false;          // A = A
      if (x.at(r, m + c) != x.at(n + r, c)) return false;          // B = B
    }
  return true;
}

bool left_block_form(const Matrix& x, std::size_t m, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      if (x.at(r, c) != x.at(n + r, m + c)) return false;
      if (x.at(r, m + c) != -x.at(n + r, c)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("u1 module: Clifford relation and block matrix") {
  ModuleAction u1 = u1_module(1, Side::right, Q);
  CHECK(u1.space.sdim() == SDim{1, 1});
  CHECK(u1.matrices[1] * u1.matrices[1] == Matrix::identity(Q, 2));

  ModuleAction u2 = u1_module(2, Side::right, Q);
  Matrix want(Q, 4, 4);
  want.at(0, 2) = want.at(1, 3) = want.at(2, 0) = want.at(3, 1) =
      Scalar::one(Q);
  CHECK(u2.matrices[1] == want);
}

TEST_CASE("C(1) hom spaces as commutants: sdim and block forms") {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n) {
      ModuleAction vm = u1_module(m, Side::right, Q);
      ModuleAction vn = u1_module(n, Side::right, Q);
      Commutant hom = hom_over_algebra(vm, vn);
      CHECK(hom.count() == 2 * m * n);  // sdim (mn, mn)
      CHECK(hom.even_count == m * n);
      for (const auto& x : hom.basis) CHECK(right_block_form(x, m, n));
    }
  // End_{C(1)}(U(1)) has total dimension 2: the type Q signature
  ModuleAction u1 = u1_module(1, Side::right, Q);
  CHECK(hom_over_algebra(u1, u1).count() == 2);
}

TEST_CASE("left modules: signed commutant and the minus-twist bridge") {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n) {
      ModuleAction lm = u1_module(m, Side::left, Q);
      ModuleAction ln = u1_module(n, Side::left, Q);
      Commutant left = hom_over_algebra(lm, ln);
      CHECK(left.count() == 2 * m * n);
      for (const auto& x : left.basis) CHECK(left_block_form(x, m, n));

      // minus twist carries left homs onto right homs, elementwise
      ModuleAction rm = u1_module(m, Side::right, Q);
      ModuleAction rn = u1_module(n, Side::right, Q);
      Commutant right = hom_over_algebra(rm, rn);
      std::vector<Vec> twisted, rights;
      for (const auto& x : left.basis)
        twisted.push_back(
            minus_twist(SuperMap(lm.space, ln.space, x)).matrix().flatten());
      for (const auto& x : right.basis) rights.push_back(x.flatten());
      CHECK(same_span(Q, lm.space.dim() * ln.space.dim(), twisted, rights));
    }
}

TEST_CASE("over GF(5), sqrt(-1) conjugates right End onto the Q_n form") {
  // i = 2 in GF(5); conjugation by diag(I, iI) sends [[A,B],[B,A]] to
  // [[A, iB], [-iB, A]].  Skipped over fields without sqrt(-1).
  Field g5 = Field::gf(5);
  for (std::size_t n = 1; n <= 2; ++n) {
    ModuleAction u = u1_module(n, Side::right, g5);
    Commutant right = hom_over_algebra(u, u);
    Matrix conj(g5, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      conj.at(i, i) = Scalar::one(g5);
      conj.at(n + i, n + i) = Scalar::of_int(g5, 2);
    }
    Matrix conj_inv(g5, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      conj_inv.at(i, i) = Scalar::one(g5);
      conj_inv.at(n + i, n + i) = Scalar::of_int(g5, 2).inverse();
    }
    for (const auto& x : right.basis)
      CHECK(left_block_form(conj_inv * x * conj, n, n));
  }
}

TEST_CASE("tensor module: d = 1 identity and the (c (x) 1) sign") {
  ModuleAction u1 = u1_module(1, Side::right, Q);
  ModuleAction t1 = tensor_module(u1, 1);
  CHECK(t1.matrices[0] == u1.matrices[0]);
  CHECK(t1.matrices[1] == u1.matrices[1]);

  // V = U(1), d = 2: (v (x) w).(c (x) 1) = (-1)^{|w|} v.c (x) w
  ModuleAction t2 = tensor_module(u1, 2);
  TensorPower power(u1.space, 2);
  const Matrix& c_slot0 = t2.matrices[1 * 2 + 0];  // c (x) 1
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t w = 0; w < 2; ++w) {
      std::size_t src = power.encode(std::vector<std::size_t>{a, w});
      // v.c flips the parity bit of the first slot; the sign is (-1)^{|w|}
      std::size_t dst = power.encode(std::vector<std::size_t>{1 - a, w});
      Scalar got = c_slot0.at(dst, src);
      Scalar want = u1.space.parity(w) == 1 ? -Scalar::one(Q) : Scalar::one(Q);
      CHECK(got == want);
    }
}

TEST_CASE("sergeev action: dimensions, signed permutations, audits") {
  ModuleAction s11 = sergeev_action(1, 1, Q);
  CHECK(s11.space.sdim() == SDim{1, 1});
  CHECK(s11.algebra.dim() == 2);

  ModuleAction s12 = sergeev_action(1, 2, Q);
  CHECK(s12.space.dim() == 4);
  CHECK(s12.algebra.dim() == 8);
  // each wreath basis element acts by a signed permutation matrix
  for (const auto& m : s12.matrices) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m.at(r, c).is_zero()) continue;
        ++nonzero;
        CHECK((m.at(r, c).is_one() || (-m.at(r, c)).is_one()));
      }
      CHECK(nonzero == 1);
    }
  }

  // (2,2): the construction runs its full representation audit
  ModuleAction s22 = sergeev_action(2, 2, Q);
  CHECK(s22.space.dim() == 16);
  CHECK(s22.algebra.dim() == 8);
}

TEST_CASE("symmetric group module examples") {
  // (1,0,d): plain place permutation, no signs
  ModuleAction plain = sym_group_action_module(1, 0, 3, Q);
  for (const auto& m : plain.matrices) CHECK(m == Matrix::identity(Q, 1));

  // (0,1,2): s1 acts by -1 on the one dimensional space
  ModuleAction sign_rep = sym_group_action_module(0, 1, 2, Q);
  std::size_t s1 = group_algebra_index(2, Permutation::transposition(2, 0));
  CHECK(sign_rep.matrices[s1].at(0, 0) == -Scalar::one(Q));

  // (1,1,2): the fixed space of s1 has dimension Gamma^2 = 2
  ModuleAction m112 = sym_group_action_module(1, 1, 2, Q);
  Matrix fixed = m112.matrices[group_algebra_index(
                     2, Permutation::transposition(2, 0))] -
                 Matrix::identity(Q, 4);
  CHECK(fixed.kernel_basis().size() == 2);
}

TEST_CASE("twisted dual module and hom-space dimensions") {
  AlgebraMap tau = identity_antiautomorphism(clifford(1, Q));
  ModuleAction u1 = u1_module(1, Side::right, Q);
  ModuleAction dual1 = twisted_dual_module(u1, tau);
  CHECK(dual1.space.sdim() == SDim{1, 1});

  ModuleAction u2 = u1_module(2, Side::right, Q);
  ModuleAction dual2 = twisted_dual_module(u2, tau);
  // dim Hom_B(V, W) = dim Hom_B(W^{tau,v}, V^{tau,v})
  CHECK(hom_over_algebra(u1, u2).count() ==
        hom_over_algebra(dual2, dual1).count());

  // dual_map of a module hom intertwines the twisted dual actions through
  // the (op, -) twist: the odd part anticommutes with odd algebra elements,
  // so the minus twist of the dual lands in the plain commutant
  Commutant hom = hom_over_algebra(u1, u2);
  for (const auto& x : hom.basis) {
    SuperMap phi(u1.space, u2.space, x);
    SuperMap bridged = minus_twist(dual_map(phi));
    for (std::size_t g = 0; g < 2; ++g) {
      Matrix defect = bridged.matrix() * dual2.matrices[g] -
                      dual1.matrices[g] * bridged.matrix();
      CHECK(defect.is_zero());
    }
    // equivalently: signed commutation of the raw dual
    SuperMap raw = dual_map(phi);
    int q = *raw.homogeneous_parity();
    Matrix rhs = dual1.matrices[1] * raw.matrix();
    if (q == 1) rhs = rhs.scaled(-Scalar::one(Q));
    CHECK(raw.matrix() * dual2.matrices[1] == rhs);
  }

  // trivial algebra: the twisted dual is the plain dual
  ModuleAction triv = trivial_module(SuperSpace::boxed(Q, 1, 1));
  AlgebraMap tau_k = identity_antiautomorphism(ground_field_algebra(Q));
  ModuleAction tdual = twisted_dual_module(triv, tau_k);
  CHECK(tdual.matrices[0] == Matrix::identity(Q, 2));
}
