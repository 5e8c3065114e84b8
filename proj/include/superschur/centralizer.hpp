#pragma once

#include "superschur/module_action.hpp"

namespace superschur {

/// Hom over an algebra, computed as the commutant of the action matrices.
/// For right modules homomorphisms commute plainly; for left modules the odd
/// part anticommutes with odd algebra elements.  The basis is homogeneous,
/// even block first.
struct Commutant {
  SuperSpace source_space, target_space;
  std::vector<Matrix> basis;  // target.dim x source.dim matrices
  std::vector<int> parities;
  std::size_t even_count = 0;

  std::size_t count() const { return basis.size(); }
  /// the commutant as a SuperSpace (basis h1, h2, ...)
  SuperSpace as_superspace() const;
};

/// {X : X rho_V(g) = rho_W(g) X} over the listed generator indices (all
/// basis elements when empty), then audited against every basis element.
Commutant hom_over_algebra(const ModuleAction& v, const ModuleAction& w,
                           std::vector<std::size_t> generators = {});

/// {X : X A_i = B_i X}: kernel of the stacked commutation operators,
/// computed by incremental kernel restriction.
std::vector<Matrix> matrix_commutant(const Field& f,
                                     const std::vector<Matrix>& a,
                                     const std::vector<Matrix>& b,
                                     std::size_t v_dim, std::size_t w_dim);

/// Generator indices that generate the given structured algebras.
std::vector<std::size_t> group_algebra_generators(std::size_t d);
std::vector<std::size_t> wreath_generators(const SuperAlgebra& a,
                                           std::size_t d);

/// Multiplication table of an endomorphism commutant (products re-expressed
/// in the commutant basis).
SuperAlgebra commutant_algebra(std::string name, const Commutant& c);

/// S(m|n,d) = End over kS_d of (k^{m|n})^{(x)d}.
SuperAlgebra schur_I(std::size_t m, std::size_t n, std::size_t d,
                     const Field& f);
/// Q(n,d) = End over W(d) of (U(1)^{(+)n})^{(x)d}.
SuperAlgebra schur_II(std::size_t n, std::size_t d, const Field& f);

/// Closed-form dimensions via the divided-power count.
unsigned long long schur_I_dimension(std::size_t m, std::size_t n,
                                     std::size_t d);
unsigned long long schur_II_dimension(std::size_t n, std::size_t d);

/// Image of W(d) in End(V^{(x)d}) vs the commutant of Q(n,d): the two
/// subspaces and whether they coincide, plus injectivity of W(d).
struct DoubleCentralizerReport {
  std::size_t n = 0, d = 0;
  bool hypothesis_met = false;  // n >= d
  std::size_t wreath_dim = 0;
  std::size_t image_rank = 0;
  bool injective = false;
  std::size_t schur_dim = 0;
  std::size_t bicommutant_dim = 0;
  bool image_equals_bicommutant = false;
  bool passed() const { return injective && image_equals_bicommutant; }
};
DoubleCentralizerReport double_centralizer(std::size_t n, std::size_t d,
                                           const Field& f);

/// Partition of the tensor basis of (U(1)^{(+)n})^{(x)d} by the multiset of
/// copy indices; blocks are W(d)-stable (asserted).
struct WeightBlock {
  std::vector<std::size_t> weight;  // composition in Lambda(n,d)
  std::vector<std::size_t> positions;
};
struct WeightDecomposition {
  std::size_t n = 0, d = 0;
  std::vector<WeightBlock> blocks;
};
WeightDecomposition weight_decomposition(std::size_t n, std::size_t d,
                                         const Field& f);

}  // namespace superschur
