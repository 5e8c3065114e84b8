#include "superschur/tensor_power.hpp"

#include <stdexcept>

namespace superschur {

namespace {

SpacePerm build_power(const SuperSpace& base, std::size_t d) {
  const std::size_t n = base.dim();
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) total *= n;
  std::vector<int> par(total);
  std::vector<std::string> lab(total);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t rank = 0; rank < total; ++rank) {
    int p = 0;
    std::string l;
    for (std::size_t k = 0; k < d; ++k) {
      p += base.parity(idx[k]);
      if (k) l += "*";
      l += base.label(idx[k]);
    }
    if (d == 0) l = "1";
    par[rank] = p % 2;
    lab[rank] = l;
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] < n) break;
      idx[k] = 0;
    }
  }
  return canonicalize(base.field(), par, lab);
}

}  // namespace

TensorPower::TensorPower(SuperSpace base, std::size_t exponent)
    : base_(std::move(base)), d_(exponent), spp_(build_power(base_, d_)) {
  from_canonical_.resize(spp_.to_canonical.size());
  for (std::size_t i = 0; i < spp_.to_canonical.size(); ++i)
    from_canonical_[spp_.to_canonical[i]] = i;
}

std::size_t TensorPower::encode(std::span<const std::size_t> idx) const {
  if (idx.size() != d_) throw std::invalid_argument("multi-index length");
  std::size_t rank = 0;
  for (std::size_t k = 0; k < d_; ++k) rank = rank * base_.dim() + idx[k];
  return spp_.to_canonical[rank];
}

std::vector<std::size_t> TensorPower::decode(std::size_t position) const {
  std::size_t rank = from_canonical_.at(position);
  std::vector<std::size_t> idx(d_);
  for (std::size_t k = d_; k-- > 0;) {
    idx[k] = rank % base_.dim();
    rank /= base_.dim();
  }
  return idx;
}

int koszul_sign(std::span<const int> parities, const Permutation& sigma) {
  // letters i < j cross exactly when sigma inverts them
  int sign = 1;
  for (std::size_t i = 0; i < parities.size(); ++i)
    for (std::size_t j = i + 1; j < parities.size(); ++j)
      if (sigma(i) > sigma(j) && parities[i] == 1 && parities[j] == 1)
        sign = -sign;
  return sign;
}

int TensorPower::place_permute(std::span<const std::size_t> idx,
                               const Permutation& sigma,
                               std::vector<std::size_t>& out) const {
  if (idx.size() != d_ || sigma.size() != d_)
    throw std::invalid_argument("place_permute size mismatch");
  out.resize(d_);
  std::vector<int> par(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    out[i] = idx[sigma(i)];
    par[i] = base_.parity(idx[i]);
  }
  // letters a < b of idx land at sigma^{-1}(a), sigma^{-1}(b)
  return koszul_sign(par, sigma.inverse());
}

Vec TensorPower::place_permute_vector(const Vec& v,
                                      const Permutation& sigma) const {
  if (v.size() != dim()) throw std::invalid_argument("vector size mismatch");
  Vec out = zero_vec(base_.field(), dim());
  std::vector<std::size_t> moved;
  for (std::size_t pos = 0; pos < dim(); ++pos) {
    if (v[pos].is_zero()) continue;
    auto idx = decode(pos);
    int sign = place_permute(idx, sigma, moved);
    Scalar t = v[pos];
    if (sign < 0) t = -t;
    out[encode(moved)] += t;
  }
  return out;
}

SuperMap boxtimes_many(const std::vector<SuperMap>& maps,
                       const TensorPower& source_power,
                       const TensorPower& target_power) {
  const std::size_t d = maps.size();
  if (source_power.exponent() != d || target_power.exponent() != d)
    throw std::invalid_argument("power exponent mismatch");
  const Field& f = source_power.base().field();
  for (const auto& m : maps)
    if (!(m.source() == source_power.base()) ||
        !(m.target() == target_power.base()))
      throw std::invalid_argument("boxtimes_many: factor space mismatch");

  struct Entry {
    std::size_t r, c;
    Scalar v;
    int q;  // entry parity
  };
  std::vector<std::vector<Entry>> nz(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t r = 0; r < maps[k].target().dim(); ++r)
      for (std::size_t c = 0; c < maps[k].source().dim(); ++c)
        if (!maps[k].at(r, c).is_zero())
          nz[k].push_back({r, c, maps[k].at(r, c),
                           maps[k].entry_parity(r, c)});

  Matrix out(f, target_power.dim(), source_power.dim());
  std::vector<std::size_t> ridx(d), cidx(d);
  // depth-first over one nonzero entry per factor; src_par tracks the parity
  // sum of the source letters chosen so far, which multiplies later factors'
  // odd entries
  auto rec = [&](auto&& self, std::size_t k, Scalar acc, int src_par) -> void {
    if (k == d) {
      out.at(target_power.encode(ridx), source_power.encode(cidx)) += acc;
      return;
    }
    for (const Entry& e : nz[k]) {
      ridx[k] = e.r;
      cidx[k] = e.c;
      Scalar v = acc * e.v;
      if (e.q == 1 && src_par == 1) v = -v;
      self(self, k + 1, v,
           (src_par + source_power.base().parity(e.c)) % 2);
    }
  };
  rec(rec, 0, Scalar::one(f), 0);
  return SuperMap(source_power.space(), target_power.space(), std::move(out));
}

SuperMap boxtimes_many(const std::vector<SuperMap>& maps, const Field& field) {
  if (maps.empty()) {
    // empty tensor: identity on the one dimensional even space
    SuperSpace unit(field, {0}, {"1"});
    return SuperMap::identity(unit);
  }
  TensorPower src(maps.front().source(), maps.size());
  TensorPower tgt(maps.front().target(), maps.size());
  return boxtimes_many(maps, src, tgt);
}

}  // namespace superschur
