#include "superschur/supermap.hpp"

#include <stdexcept>

namespace superschur {

SuperMap::SuperMap(SuperSpace source, SuperSpace target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)),
      mat_(std::move(mat)) {
  if (mat_.rows() != target_.dim() || mat_.cols() != source_.dim())
    throw std::invalid_argument("matrix shape does not match spaces");
  if (!(mat_.field() == source_.field()))
    throw std::invalid_argument("field mismatch");
}

SuperMap SuperMap::zero(const SuperSpace& source, const SuperSpace& target) {
  return SuperMap(source, target,
                  Matrix(source.field(), target.dim(), source.dim()));
}

SuperMap SuperMap::identity(const SuperSpace& space) {
  return SuperMap(space, space,
                  Matrix::identity(space.field(), space.dim()));
}

SuperMap SuperMap::unit(const SuperSpace& source, const SuperSpace& target,
                        std::size_t t, std::size_t s) {
  SuperMap m = zero(source, target);
  m.at(t, s) = Scalar::one(source.field());
  return m;
}

std::optional<int> SuperMap::homogeneous_parity() const {
  bool has[2] = {false, false};
  for (std::size_t r = 0; r < mat_.rows(); ++r)
    for (std::size_t c = 0; c < mat_.cols(); ++c)
      if (!mat_.at(r, c).is_zero()) has[entry_parity(r, c)] = true;
  if (has[0] && has[1]) return std::nullopt;
  return has[1] ? 1 : 0;
}

SuperMap SuperMap::graded_part(int parity) const {
  SuperMap m = zero(source_, target_);
  for (std::size_t r = 0; r < mat_.rows(); ++r)
    for (std::size_t c = 0; c < mat_.cols(); ++c)
      if (entry_parity(r, c) == parity) m.at(r, c) = mat_.at(r, c);
  return m;
}

SuperMap SuperMap::operator+(const SuperMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_))
    throw std::invalid_argument("space mismatch");
  return SuperMap(source_, target_, mat_ + o.mat_);
}

SuperMap SuperMap::operator-(const SuperMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_))
    throw std::invalid_argument("space mismatch");
  return SuperMap(source_, target_, mat_ - o.mat_);
}

SuperMap SuperMap::scaled(const Scalar& c) const {
  return SuperMap(source_, target_, mat_.scaled(c));
}

bool SuperMap::operator==(const SuperMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && mat_ == o.mat_;
}

SuperMap compose(const SuperMap& g, const SuperMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose: middle space mismatch");
  return SuperMap(f.source(), g.target(), g.matrix() * f.matrix());
}

std::pair<SuperMap, SuperMap> direct_sum_inclusions(const SuperSpace& m,
                                                    const SuperSpace& n) {
  SpacePerm sum = direct_sum(m, n);
  SuperMap left = SuperMap::zero(m, sum.space);
  for (std::size_t i = 0; i < m.dim(); ++i)
    left.at(sum.to_canonical[i], i) = Scalar::one(m.field());
  SuperMap right = SuperMap::zero(n, sum.space);
  for (std::size_t j = 0; j < n.dim(); ++j)
    right.at(sum.to_canonical[m.dim() + j], j) = Scalar::one(m.field());
  return {std::move(left), std::move(right)};
}

SuperMap boxtimes(const SuperMap& f, const SuperMap& g) {
  SpacePerm src = tensor_product_space(f.source(), g.source());
  SpacePerm tgt = tensor_product_space(f.target(), g.target());
  const std::size_t gs = g.source().dim(), gt = g.target().dim();
  Matrix m(f.matrix().field(), tgt.space.dim(), src.space.dim());
  for (std::size_t r = 0; r < f.target().dim(); ++r)
    for (std::size_t c = 0; c < f.source().dim(); ++c) {
      const Scalar& a = f.at(r, c);
      if (a.is_zero()) continue;
      for (std::size_t r2 = 0; r2 < gt; ++r2)
        for (std::size_t c2 = 0; c2 < gs; ++c2) {
          const Scalar& b = g.at(r2, c2);
          if (b.is_zero()) continue;
          Scalar v = a * b;
          // (-1)^{|g-entry| |v_c|}
          if (g.entry_parity(r2, c2) == 1 && f.source().parity(c) == 1)
            v = -v;
          m.at(tgt.to_canonical[r * gt + r2], src.to_canonical[c * gs + c2]) = v;
        }
    }
  return SuperMap(src.space, tgt.space, std::move(m));
}

SuperMap dual_map(const SuperMap& f) {
  SuperSpace src = dual_space(f.target());
  SuperSpace tgt = dual_space(f.source());
  Matrix m(f.matrix().field(), tgt.dim(), src.dim());
  // <f^(w^), v> = (-1)^{|f-entry| |w|} f[w, v]
  for (std::size_t w = 0; w < src.dim(); ++w)
    for (std::size_t v = 0; v < tgt.dim(); ++v) {
      Scalar x = f.at(w, v);
      if (x.is_zero()) continue;
      if (f.entry_parity(w, v) == 1 && f.target().parity(w) == 1) x = -x;
      m.at(v, w) = x;
    }
  return SuperMap(std::move(src), std::move(tgt), std::move(m));
}

SuperMap minus_twist(const SuperMap& f) {
  SuperMap m = f;
  for (std::size_t r = 0; r < m.matrix().rows(); ++r)
    for (std::size_t c = 0; c < m.matrix().cols(); ++c)
      if (m.entry_parity(r, c) == 1 && f.source().parity(c) == 1)
        m.at(r, c) = -m.at(r, c);
  return m;
}

}  // namespace superschur
