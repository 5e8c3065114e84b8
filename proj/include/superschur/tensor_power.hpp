#pragma once

#include <span>

#include "superschur/perm.hpp"
#include "superschur/supermap.hpp"

namespace superschur {

/// The d-fold tensor power of a superspace, with the bijection between
/// multi-indices (lexicographic) and canonical basis positions.
class TensorPower {
 public:
  TensorPower(SuperSpace base, std::size_t exponent);

  const SuperSpace& base() const { return base_; }
  std::size_t exponent() const { return d_; }
  const SuperSpace& space() const { return spp_.space; }
  std::size_t dim() const { return spp_.space.dim(); }

  std::size_t encode(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> decode(std::size_t position) const;

  /// Koszul sign picked up when the basis tensor `idx` is rearranged by the
  /// right place-permutation action of sigma; `out` receives idx.sigma with
  /// out[i] = idx[sigma(i)], so that (v.sigma).tau = v.(sigma o tau).
  int place_permute(std::span<const std::size_t> idx, const Permutation& sigma,
                    std::vector<std::size_t>& out) const;

  /// Coordinate action of sigma on a vector in the tensor power.
  Vec place_permute_vector(const Vec& v, const Permutation& sigma) const;

 private:
  SuperSpace base_;
  std::size_t d_;
  SpacePerm spp_;  // natural lex rank -> canonical position
  std::vector<std::size_t> from_canonical_;
};

/// Koszul sign of rearranging homogeneous letters with the given parities by
/// sigma (right action): product of (-1)^{p_i p_j} over inversions.
int koszul_sign(std::span<const int> parities, const Permutation& sigma);

/// f1 (x) f2 (x) ... (x) fd as a map between flat tensor powers; the sign on
/// a basis tensor is (-1)^{sum_{i<j} |f_j||v_i|} per homogeneous entries.
SuperMap boxtimes_many(const std::vector<SuperMap>& maps, const Field& field);

SuperMap boxtimes_many(const std::vector<SuperMap>& maps,
                       const TensorPower& source_power,
                       const TensorPower& target_power);

}  // namespace superschur
