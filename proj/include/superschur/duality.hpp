#pragma once

#include "superschur/centralizer.hpp"

namespace superschur {

/// Pairing between Gamma^d M and S^d(M^dual), evaluated on class
/// representatives with the tensor-power Koszul signs.  Well-definedness is
/// certified (the pairing kills the symmetrization ideal), not assumed.
struct GammaSymPairing {
  GammaBasis gamma;          // Gamma^d M
  SymmetricBasis sym_dual;   // S^d (M^dual)
  Matrix gram;               // sym x gamma
  bool well_defined = false;
  bool perfect = false;      // square and full rank
};
GammaSymPairing gamma_sym_pairing(const SuperSpace& m, std::size_t d);

/// The tau-twisted right module structure on V^dual:
/// <f.a, v> = <f, v.tau(a)>.
ModuleAction twisted_dual_module(const ModuleAction& action,
                                 const AlgebraMap& tau);

/// A finite dimensional cosuperalgebra: comultiplication coordinates
/// delta[(i,j), k] for Delta(e_k) in the lexicographic pair basis, plus the
/// counit.
struct Cosuperalgebra {
  Field field;
  std::vector<int> parities;
  std::vector<std::string> labels;
  Matrix delta;  // dim^2 x dim
  Vec counit;

  std::size_t dim() const { return parities.size(); }
  /// coassociativity + counit laws
  void audit() const;
};

/// B^dual with the comultiplication transpose to multiplication
/// (<Delta f, a (x) b> = <f, ab> under the componentwise pairing).
Cosuperalgebra dual_cosuperalgebra(const SuperAlgebra& b);

/// The dual algebra of a coalgebra: <fg, a> = sum over Delta(a) terms
/// x (x) y of (-1)^{|g||x|} f(x) g(y); unit = counit.
SuperAlgebra dual_algebra_of_cosuperalgebra(const Cosuperalgebra& a,
                                            std::string name);

/// Tensor product coalgebra (Delta (x) Delta followed by the signed middle
/// swap).
Cosuperalgebra tensor_cosuperalgebra(const Cosuperalgebra& a,
                                     const Cosuperalgebra& b);

/// (B^dual)^dual against B^-: the double-dual algebra built from the two
/// dualizations must match the minus twist table exactly.
struct DoubleDualReport {
  std::size_t dim = 0;
  bool matches_minus_twist = false;
};
DoubleDualReport double_dual_algebra_check(const SuperAlgebra& b);

/// (A^dual)^{(x)d} vs ((A^{(x)d}))^dual for the coalgebra A = B^dual, under
/// the diagonal sign identification of the tensor-power pairing.
bool tensor_power_dual_check(const SuperAlgebra& b, std::size_t d);

/// S^d(B^dual)^dual vs Gamma^d(B^-): builds both superalgebras and verifies
/// that the canonical pairing-induced map is a unital algebra isomorphism.
struct CosalgReport {
  std::size_t sym_dual_dim = 0;
  std::size_t gamma_minus_dim = 0;
  bool comultiplication_well_defined = false;
  bool iso_verified = false;
  bool passed() const {
    return comultiplication_well_defined && iso_verified &&
           sym_dual_dim == gamma_minus_dim;
  }
};
CosalgReport cosalg_duality_check(const SuperAlgebra& b, std::size_t d);

}  // namespace superschur
