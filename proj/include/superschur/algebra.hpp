#pragma once

#include <map>
#include <string>

#include "superschur/matrix.hpp"
#include "superschur/perm.hpp"

namespace superschur {

/// A finite dimensional associative unital superalgebra given by a
/// homogeneous basis, a parity vector and sparse structure constants.
/// Unlike SuperSpace bases, algebra bases keep their structural order
/// (Clifford monomials, permutations, ...), which may interleave parities.
///
/// Unit, associativity and parity additivity are audited on construction:
/// exhaustively up to dim 64, on random samples above.
class SuperAlgebra {
 public:
  using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

  SuperAlgebra(std::string name, const Field& f, std::vector<int> parities,
               std::vector<std::string> labels, Vec unit,
               std::vector<std::vector<SparseVec>> products);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return parities_.size(); }
  int parity(std::size_t i) const { return parities_[i]; }
  const std::vector<int>& parities() const { return parities_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  /// product of basis elements i and j, as a sparse vector
  const SparseVec& product(std::size_t i, std::size_t j) const {
    return products_[i][j];
  }

  Vec multiply(const Vec& a, const Vec& b) const;
  SuperAlgebra renamed(std::string new_name) const;

 private:
  void audit() const;

  std::string name_;
  Field field_;
  std::vector<int> parities_;
  std::vector<std::string> labels_;
  Vec unit_;
  std::vector<std::vector<SparseVec>> products_;
};

/// An even linear map of superalgebras; multiplicative or anti-multiplicative
/// depending on how it was built.  Columns = images of source basis elements.
struct AlgebraMap {
  SuperAlgebra source;
  SuperAlgebra target;
  Matrix matrix;
  bool anti = false;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  /// checks even + unit-preserving + (anti)multiplicative on all basis pairs
  void verify() const;
  bool is_bijective() const { return matrix.rank() == matrix.cols(); }
};

/// The ground field as a one dimensional superalgebra.
SuperAlgebra ground_field_algebra(const Field& f);
/// Split commutative k (+) k with componentwise product (for duality checks).
SuperAlgebra split_pair_algebra(const Field& f);

/// Clifford superalgebra C(d): odd generators c_1..c_d, c_i^2 = 1,
/// c_i c_j = -c_j c_i.  Basis: square-free monomials c_S in bitmask order.
SuperAlgebra clifford(std::size_t d, const Field& f);

/// C(1) realized as 2x2 matrices [[a,b],[b,a]]; the table is computed from
/// actual matrix products, with the isomorphism c_1 -> J1 = [[0,1],[1,0]].
struct CliffordMatrixModel {
  SuperAlgebra algebra;
  AlgebraMap from_clifford1;  // clifford(1) -> algebra
};
CliffordMatrixModel clifford_matrix_model(const Field& f);

/// The even isomorphism C(d1+d2) -> C(d1) (x) C(d2) on generators
/// c_i -> c_i (x) 1, c_{d1+j} -> 1 (x) c_j.
struct CliffordFactorization {
  SuperAlgebra target;  // C(d1) (x) C(d2)
  AlgebraMap map;
};
CliffordFactorization clifford_factorization(std::size_t d1, std::size_t d2,
                                             const Field& f);

/// Tensor product superalgebra with the Koszul rule
/// (a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'.
SuperAlgebra tensor_algebra(const SuperAlgebra& a, const SuperAlgebra& b);
/// Flat d-fold tensor power of an algebra; basis = d-tuples, lexicographic.
SuperAlgebra tensor_power_algebra(const SuperAlgebra& a, std::size_t d);

/// Group algebra k S_d; basis = permutations in lexicographic one-line order,
/// all even.  Products compose left to right (right-action convention).
SuperAlgebra group_algebra(std::size_t d, const Field& f);

/// Wreath product A wr S_d on k S_d (x) A^{(x)d} with
/// (sigma (x) a)(sigma' (x) b) = sigma sigma' (x) (a.sigma') b, where
/// a.sigma' is the signed place permutation.  Basis: permutation-major,
/// then A-monomials lexicographic.
SuperAlgebra wreath(const SuperAlgebra& a, std::size_t d);

/// Sergeev superalgebra W(d) = C(1) wr S_d.
SuperAlgebra sergeev(std::size_t d, const Field& f);

/// A^- with product resigned by (-1)^{|a||b|}.
SuperAlgebra minus_algebra(const SuperAlgebra& a);

/// Index helpers for wreath/group algebras.
std::size_t group_algebra_index(std::size_t d, const Permutation& sigma);
std::size_t wreath_index(const SuperAlgebra& a, std::size_t d,
                         const Permutation& sigma,
                         const std::vector<std::size_t>& monomial);

/// Extends an antiautomorphism tau of A to B = A wr S_d by
/// tau_d(a_1 (x) ... (x) a_d) = (-1)^{sum_{i<j}|a_i||a_j|} tau(a_1) (x) ...
/// and tau_d(s_i) = s_i.  Anti-multiplicativity is verified.
AlgebraMap tau_antiautomorphism(const SuperAlgebra& a,
                                const AlgebraMap& tau_on_a, std::size_t d,
                                const SuperAlgebra& wreath_algebra);

/// Identity as an (anti)automorphism witness of a commutative-enough A;
/// verified, so it throws if id is not an antiautomorphism of A.
AlgebraMap identity_antiautomorphism(const SuperAlgebra& a);

}  // namespace superschur
