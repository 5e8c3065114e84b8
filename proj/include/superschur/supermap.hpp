#pragma once

#include <optional>

#include "superschur/matrix.hpp"
#include "superschur/superspace.hpp"

namespace superschur {

/// A linear map between superspaces, stored as one exact matrix (columns
/// indexed by the source basis).  Maps need not be homogeneous; the even and
/// odd parts are split on demand from the basis parities.
class SuperMap {
 public:
  SuperMap(SuperSpace source, SuperSpace target, Matrix mat);
  static SuperMap zero(const SuperSpace& source, const SuperSpace& target);
  static SuperMap identity(const SuperSpace& space);
  /// The matrix unit E[t,s]: source basis s to target basis t.
  static SuperMap unit(const SuperSpace& source, const SuperSpace& target,
                       std::size_t t, std::size_t s);

  const SuperSpace& source() const { return source_; }
  const SuperSpace& target() const { return target_; }
  const Matrix& matrix() const { return mat_; }
  Matrix& matrix() { return mat_; }
  const Scalar& at(std::size_t r, std::size_t c) const { return mat_.at(r, c); }
  Scalar& at(std::size_t r, std::size_t c) { return mat_.at(r, c); }

  /// Parity of the matrix entry slot (r, c).
  int entry_parity(std::size_t r, std::size_t c) const {
    return (target_.parity(r) + source_.parity(c)) % 2;
  }

  SuperMap even_part() const { return graded_part(0); }
  SuperMap odd_part() const { return graded_part(1); }
  /// 0, 1, or nullopt if mixed; the zero map counts as even.
  std::optional<int> homogeneous_parity() const;

  SuperMap operator+(const SuperMap& o) const;
  SuperMap operator-(const SuperMap& o) const;
  SuperMap scaled(const Scalar& c) const;
  bool operator==(const SuperMap& o) const;

 private:
  SuperMap graded_part(int parity) const;

  SuperSpace source_, target_;
  Matrix mat_;
};

/// g after f; matrix product.
SuperMap compose(const SuperMap& g, const SuperMap& f);

/// The two canonical (even, injective) inclusions into M (+) N, routed
/// through the recorded canonical-order permutation.
std::pair<SuperMap, SuperMap> direct_sum_inclusions(const SuperSpace& m,
                                                    const SuperSpace& n);

/// f (x) g on the canonical tensor product spaces, with the Koszul sign
/// (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w) applied per homogeneous
/// entry of g.
SuperMap boxtimes(const SuperMap& f, const SuperMap& g);

/// The dual f^: target-dual -> source-dual with
/// <f^(phi), v> = (-1)^{|f||phi|} <phi, f(v)>.
SuperMap dual_map(const SuperMap& f);

/// f^-(v) = (-1)^{|f||v|} f(v): negates odd-part entries in odd columns.
SuperMap minus_twist(const SuperMap& f);

}  // namespace superschur
