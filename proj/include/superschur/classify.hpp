#pragma once

#include <cstddef>
#include <vector>

#include "superschur/perm.hpp"

namespace superschur {

/// A partition: weakly decreasing positive parts (empty = zero partition).
using Partition = std::vector<std::size_t>;

/// All partitions of n, lexicographically decreasing ((n), (n-1,1), ...).
std::vector<Partition> partitions_of(std::size_t n);

/// Simple-object labels of degree d in type I over GF(p): pairs (lambda, mu)
/// with |lambda| + p|mu| = d.  Refuses p = 0, where the degree condition
/// degenerates.
std::vector<std::pair<Partition, Partition>> labels_type_I(std::size_t d,
                                                           std::size_t p);

/// Simple-object labels of degree d in type II: partitions of d where equal
/// adjacent parts are allowed only when divisible by p (strict partitions
/// when p = 0).
std::vector<Partition> labels_type_II(std::size_t d, std::size_t p);

/// Lambda(n,d): all n-part compositions of d, decreasing lexicographic.
std::vector<std::vector<std::size_t>> weight_compositions(std::size_t n,
                                                          std::size_t d);

}  // namespace superschur
