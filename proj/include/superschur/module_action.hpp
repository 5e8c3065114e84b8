#pragma once

#include "superschur/algebra.hpp"
#include "superschur/sym_action.hpp"

namespace superschur {

enum class Side { left, right };

/// A supermodule given by one action matrix per algebra basis element, on a
/// canonical SuperSpace.  Right actions are stored column-style: the
/// coordinates of v.x are matrix(x) * coords(v), so the representation
/// property reads matrix(xy) = matrix(y) * matrix(x); left actions compose
/// the usual way round.
struct ModuleAction {
  SuperAlgebra algebra;
  SuperSpace space;
  Side side;
  std::vector<Matrix> matrices;

  Vec apply(const Vec& v, std::size_t basis_element) const {
    return matrices[basis_element].apply(v);
  }
  /// expand the action of a general algebra element
  Matrix action_of(const Vec& element) const;
  /// representation property on all basis pairs + parity homogeneity
  void audit() const;
};

/// The ground field acting trivially on any superspace.
ModuleAction trivial_module(const SuperSpace& space);

/// U(1)^{(+)n} (side = right) or U_l(1)^{(+)n} (side = left): the free rank-n
/// module over C(1), sdim (n, n); c_1 acts by the block antidiagonal
/// [[0, I_n], [I_n, 0]].
ModuleAction u1_module(std::size_t n, Side side, const Field& f);

/// A^{(x)d} acting on V^{(x)d} with the Koszul signs
/// (v_1 (x)...(x) v_d).(a_1 (x)...(x) a_d) picks up (-1)^{sum_{i<j}|a_i||v_j|}.
/// Also asserts the compatibility (v.a).sigma = (v.sigma).(a.sigma) on
/// adjacent transpositions.
ModuleAction tensor_module(const ModuleAction& action, std::size_t d);

/// A wr S_d acting on V^{(x)d} for a right A-module V: the group part acts
/// by signed place permutations, the A^{(x)d} part via tensor_module, and
/// v.(sigma (x) a) = (v.sigma).a.
ModuleAction wreath_action(const ModuleAction& base, std::size_t d);

/// W(d) = C(1) wr S_d acting on (U(1)^{(+)n})^{(x)d}.
ModuleAction sergeev_action(std::size_t n, std::size_t d, const Field& f);

/// k S_d acting on (k^{m|n})^{(x)d} by signed place permutations.
ModuleAction sym_group_action_module(std::size_t m, std::size_t n,
                                     std::size_t d, const Field& f);

}  // namespace superschur
