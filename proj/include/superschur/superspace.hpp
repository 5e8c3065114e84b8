#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superschur/field.hpp"

namespace superschur {

struct SDim {
  std::size_t even = 0, odd = 0;
  bool operator==(const SDim&) const = default;
};

/// A finite Z_2-graded vector space given by an ordered homogeneous basis.
/// The basis order is canonical: all even vectors precede all odd vectors.
class SuperSpace {
 public:
  /// k^{m|n} with basis e1..em (even), e'1..e'n (odd).
  static SuperSpace boxed(const Field& f, std::size_t m, std::size_t n);
  /// Canonical even-first space with explicit labels.
  SuperSpace(const Field& f, std::vector<int> parities,
             std::vector<std::string> labels);

  const Field& field() const { return field_; }
  std::size_t dim() const { return parities_.size(); }
  SDim sdim() const { return sdim_; }
  int parity(std::size_t i) const { return parities_[i]; }
  const std::vector<int>& parities() const { return parities_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const SuperSpace& o) const;

 private:
  Field field_;
  std::vector<int> parities_;
  std::vector<std::string> labels_;
  SDim sdim_;
};

/// A space built from others, with the permutation witness from the natural
/// index order of the construction to the canonical even-first order.
struct SpacePerm {
  SuperSpace space;
  std::vector<std::size_t> to_canonical;  // natural index -> position in space
};

/// Stable parity sort of (parity, label) pairs; used by every construction.
SpacePerm canonicalize(const Field& f, const std::vector<int>& parities,
                       const std::vector<std::string>& labels);

/// M (+) N; natural order: M basis then N basis.
SpacePerm direct_sum(const SuperSpace& m, const SuperSpace& n);
/// M (x) N; natural order: lexicographic pairs (i, j), parity adds.
SpacePerm tensor_product_space(const SuperSpace& m, const SuperSpace& n);
/// Hom(M, N); natural order: matrix units E[t,s] lexicographic in (t, s),
/// parity(E[t,s]) = parity_N(t) + parity_M(s).
SpacePerm hom_space(const SuperSpace& m, const SuperSpace& n);

/// Pi M: parities flipped (basis re-sorted odd-block-first becomes canonical).
SpacePerm parity_change(const SuperSpace& m);
/// Dual space with the dual basis; parities preserved, labels get "^".
SuperSpace dual_space(const SuperSpace& m);

}  // namespace superschur
