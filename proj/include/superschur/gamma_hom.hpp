#pragma once

#include "superschur/centralizer.hpp"

namespace superschur {

/// Gamma^d Hom_B(V, W) for right modules over B in {k, C(1)}: the invariant
/// vectors of the d-th tensor power of the hom space, each realized as a
/// concrete map V^{(x)d} -> W^{(x)d}.  Construction is cross-checked against
/// the direct commutant over B wr S_d: the two subspaces must coincide.
struct GammaHom {
  std::size_t d = 0;
  Commutant hom;              // Hom_B(V, W), homogeneous basis
  GammaBasis gamma;           // Gamma^d of the hom superspace
  TensorPower source_power, target_power;
  std::vector<Matrix> realized;  // one map per gamma basis vector
  std::vector<int> parities;
  SolveEngine coords;  // membership/coordinates in the realized span

  std::size_t count() const { return realized.size(); }
  /// coordinates of a map in the realized basis, if it lies in the span
  std::optional<Vec> coordinates(const Matrix& map) const;
  Matrix realize(const Vec& coefficients) const;
  /// coordinates of the invariant identity id^{(x)d} (endomorphism case)
  Vec identity_coordinates() const;
};

GammaHom gamma_hom(const ModuleAction& v, const ModuleAction& w,
                   std::size_t d);

/// g o f through the realized maps, certified to land in the target span.
Vec gamma_compose(const GammaHom& gpw, const Vec& g, const GammaHom& gvp,
                  const Vec& f, const GammaHom& gvw);

/// Rank of the composition map
/// Gamma^d Hom(P,W) (x) Gamma^d Hom(V,P) -> Gamma^d Hom(V,W)
/// against the target dimension.
struct SurjectivityReport {
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  bool surjective = false;
};
SurjectivityReport surjectivity_report(const ModuleAction& v,
                                       const ModuleAction& p,
                                       const ModuleAction& w, std::size_t d);

/// Gamma^d Hom_{C(1)} inside Gamma^d Hom_k on the same tensor spaces:
/// inclusion of spans, matching identities, and agreement of the two
/// composition laws on the subspace.
struct RestrictionReport {
  std::size_t q_dim = 0, m_dim = 0;
  bool inclusion = false;
  bool identity_matches = false;
  bool composition_agrees = false;
  bool pi_self_dual_sdim = false;  // sdim(V) of the form (n, n)
  bool passed() const {
    return inclusion && identity_matches && composition_agrees;
  }
};
RestrictionReport restriction_functor_check(std::size_t n, std::size_t d,
                                            const Field& f);

}  // namespace superschur
