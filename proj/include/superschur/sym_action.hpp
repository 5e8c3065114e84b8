#pragma once

#include "superschur/tensor_power.hpp"

namespace superschur {

/// Signed right action of the adjacent transposition s_i (swapping tensor
/// factors i and i+1, 0-based, 0 <= i <= d-2) on M^{(x)d}.  An involution
/// with entries +-1.
SuperMap transposition_action(const TensorPower& power, std::size_t i);
SuperMap transposition_action(const SuperSpace& m, std::size_t d,
                              std::size_t i);

/// Signed right action of sigma, computed as the product of transposition
/// actions along a reduced word (bubble sort).  Independent of the word.
SuperMap permutation_action(const TensorPower& power, const Permutation& sigma);
SuperMap permutation_action(const SuperSpace& m, std::size_t d,
                            const Permutation& sigma);

/// Label of a divided-power basis vector: even basis indices with
/// multiplicities plus a strictly increasing set of odd basis indices,
/// total degree = d.
struct GammaLabel {
  std::vector<std::pair<std::size_t, std::size_t>> even;  // (index, mult)
  std::vector<std::size_t> odd;
};

/// Basis of Gamma^d M = (M^{(x)d})^{S_d}, computed two independent ways that
/// are certified to agree: the joint kernel of the transposition actions and
/// the combinatorial orbit-sum vectors (sums over coset representatives, so
/// valid in any characteristic).
struct GammaBasis {
  TensorPower power;
  std::vector<GammaLabel> labels;
  std::vector<Vec> vectors;  // coordinates in power.space(), one per label
  std::size_t count() const { return labels.size(); }
  /// parity of vector i (= number of odd letters mod 2)
  int parity(std::size_t i) const { return labels[i].odd.size() % 2; }
  Matrix embedding() const;  // columns = vectors
};

GammaBasis gamma_invariants(const SuperSpace& m, std::size_t d);

/// The labeled orbit-sum vectors alone, without the kernel cross-check;
/// gamma_invariants builds on this and certifies the span.
GammaBasis gamma_orbit_basis(const SuperSpace& m, std::size_t d);

/// dim Gamma^d of a space of sdim (m, n): sum_{k+l=d} C(m+k-1,k) C(n,l).
unsigned long long gamma_dimension(std::size_t m, std::size_t n, std::size_t d);

/// S^d M = (M^{(x)d})_{S_d} with the sorted-monomial section.  The quotient
/// map is certified to kill the generators x - x.s_i of the ideal.
struct SymmetricBasis {
  TensorPower power;
  /// weakly increasing multi-indices, strictly increasing on odd letters
  std::vector<std::vector<std::size_t>> monomials;
  Matrix quotient;  // (#monomials) x dim: class coordinates of basis tensors
  std::size_t count() const { return monomials.size(); }
  int parity(std::size_t i) const;
  /// representative tensor of monomial class i (position in power.space())
  std::size_t section(std::size_t i) const;
};

SymmetricBasis symmetric_power(const SuperSpace& m, std::size_t d);

/// The exponential-property isomorphism
/// Gamma^d(M (+) N) <-> (+)_i Gamma^{d-i} M (x) Gamma^i N, as an explicit
/// invertible change of basis (columns = shuffle products of the piece basis
/// vectors, in Gamma^d(M (+) N) coordinates).
struct ExponentialDecomposition {
  SpacePerm sum;
  GammaBasis whole;
  std::vector<std::pair<GammaBasis, GammaBasis>> pieces;  // i = 0..d
  Matrix change_of_basis;
};

ExponentialDecomposition exponential_decomposition(const SuperSpace& m,
                                                   const SuperSpace& n,
                                                   std::size_t d);

/// Containment Gamma^{d+e} M inside Gamma^d M (x) Gamma^e M, where the
/// (d+e)-fold tensor power is read as M^{(x)d} (x) M^{(x)e} by splitting
/// multi-indices.
bool gamma_embedding_check(const SuperSpace& m, std::size_t d, std::size_t e);

}  // namespace superschur
