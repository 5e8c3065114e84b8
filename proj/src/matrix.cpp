#include "superschur/matrix.hpp"

#include <stdexcept>

namespace superschur {

Vec zero_vec(const Field& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

bool is_zero_vec(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy size mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows,
                            const std::vector<Vec>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  // row-sparsity of the right factor drives the cost
  std::vector<std::vector<std::size_t>> nz(o.rows_);
  for (std::size_t k = 0; k < o.rows_; ++k)
    for (std::size_t j = 0; j < o.cols_; ++j)
      if (!o.at(k, j).is_zero()) nz[k].push_back(j);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j : nz[k]) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& s : r.data_) s *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
    return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply size mismatch");
  Vec r = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

Vec Matrix::column(std::size_t j) const {
  Vec c = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

Vec Matrix::flatten() const { return data_; }

namespace {

// Fraction-free Bareiss forward elimination of an integer matrix, in place.
// Returns pivot (row, col) pairs in order.
std::vector<std::pair<std::size_t, std::size_t>> bareiss_forward(
    std::vector<std::vector<BigInt>>& m) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  BigInt prev = 1;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
    std::size_t sel = pr;
    while (sel < rows && m[sel][pc].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[pr], m[sel]);
    const BigInt pivot = m[pr][pc];
    for (std::size_t i = pr + 1; i < rows; ++i) {
      const BigInt head = m[i][pc];
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = (pivot * m[i][j] - head * m[pr][j]) / prev;  // exact
      }
    }
    prev = pivot;
    pivots.emplace_back(pr, pc);
    ++pr;
  }
  return pivots;
}

}  // namespace

Matrix::Echelon Matrix::reduced_echelon() const {
  if (field_.is_rational()) {
    // Scale rows to integers, Bareiss forward, then normalize to RREF.
    std::vector<std::vector<BigInt>> m(rows_, std::vector<BigInt>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      BigInt l = 1;
      for (std::size_t j = 0; j < cols_; ++j)
        l = boost::multiprecision::lcm(
            l, BigInt(boost::multiprecision::denominator(at(i, j).rational())));
      for (std::size_t j = 0; j < cols_; ++j) {
        BigRational v = at(i, j).rational() * BigRational(l);
        m[i][j] = boost::multiprecision::numerator(v);
      }
    }
    auto piv = bareiss_forward(m);
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r.at(i, j) = Scalar::of_rational(BigRational(m[i][j]));
    // normalize pivots to 1 and eliminate upwards
    std::vector<std::size_t> pivots;
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      auto [pr, pc] = *it;
      Scalar inv = r.at(pr, pc).inverse();
      for (std::size_t j = 0; j < cols_; ++j) r.at(pr, j) *= inv;
      for (std::size_t i = 0; i < pr; ++i) {
        Scalar f = r.at(i, pc);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j)
          r.at(i, j) -= f * r.at(pr, j);
      }
    }
    for (auto [pr, pc] : piv) pivots.push_back(pc);
    return Echelon{std::move(r), std::move(pivots), piv.size()};
  }

  // GF(p): plain Gauss-Jordan elimination.
  Matrix r = *this;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
    std::size_t sel = pr;
    while (sel < rows_ && r.at(sel, pc).is_zero()) ++sel;
    if (sel == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(r.at(pr, j), r.at(sel, j));
    Scalar inv = r.at(pr, pc).inverse();
    for (std::size_t j = 0; j < cols_; ++j) r.at(pr, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      Scalar f = r.at(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) -= f * r.at(pr, j);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return Echelon{std::move(r), std::move(pivots), pr};
}

std::size_t Matrix::rank() const { return reduced_echelon().rank; }

std::vector<Vec> Matrix::kernel_basis() const {
  Echelon e = reduced_echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(field_, cols_);
    x[f] = Scalar::one(field_);
    for (std::size_t r = 0; r < e.rank; ++r)
      x[e.pivots[r]] = -e.rref.at(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> Matrix::solve(std::span<const Scalar> b) const {
  return SolveEngine(*this).solve(b);
}

SolveEngine::SolveEngine(Matrix a)
    : a_(std::move(a)),
      transform_(a_.field(), 0, 0),
      rref_(a_.field(), 0, 0),
      rank_(0) {
  // Eliminate [A | I]; the I block accumulates the row transform.
  const std::size_t n = a_.rows(), m = a_.cols();
  Matrix aug(a_.field(), n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug.at(i, j) = a_.at(i, j);
    aug.at(i, m + i) = Scalar::one(a_.field());
  }
  auto ech = aug.reduced_echelon();
  // pivots beyond column m would come from the identity block; those rows
  // witness rank deficiencies of A and carry consistency constraints.
  rank_ = 0;
  for (auto p : ech.pivots)
    if (p < m) ++rank_;
  pivots_.assign(ech.pivots.begin(), ech.pivots.begin() + rank_);
  rref_ = Matrix(a_.field(), n, m);
  transform_ = Matrix(a_.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rref_.at(i, j) = ech.rref.at(i, j);
    for (std::size_t j = 0; j < n; ++j)
      transform_.at(i, j) = ech.rref.at(i, m + j);
  }
}

std::optional<Vec> SolveEngine::solve(std::span<const Scalar> b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("solve size");
  Vec c = transform_.apply(b);
  for (std::size_t i = rank_; i < c.size(); ++i)
    if (!c[i].is_zero()) return std::nullopt;
  // Free coordinates pinned to zero; rows past rank_ carry the consistency
  // constraints, checked above.
  Vec x = zero_vec(a_.field(), a_.cols());
  for (std::size_t r = 0; r < rank_; ++r) x[pivots_[r]] = c[r];
  return x;
}

bool SolveEngine::contains(std::span<const Scalar> b) const {
  return solve(b).has_value();
}

SignedPerm SignedPerm::after(const SignedPerm& other) const {
  // (this * other) e_c = other.sign[c] * this(e_{other.image[c]})
  SignedPerm r{std::vector<std::size_t>(image.size()),
               std::vector<int>(image.size())};
  for (std::size_t c = 0; c < image.size(); ++c) {
    r.image[c] = image[other.image[c]];
    r.sign[c] = sign[other.image[c]] * other.sign[c];
  }
  return r;
}

std::optional<SignedPerm> as_signed_permutation(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  SignedPerm p{std::vector<std::size_t>(n), std::vector<int>(n)};
  std::vector<bool> hit(n, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t found = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      if (found != n) return std::nullopt;
      found = r;
      Scalar v = m.at(r, c);
      if (v.is_one())
        p.sign[c] = 1;
      else if ((-v).is_one())
        p.sign[c] = -1;
      else
        return std::nullopt;
    }
    if (found == n || hit[found]) return std::nullopt;
    hit[found] = true;
    p.image[c] = found;
  }
  return p;
}

std::size_t span_rank(const Field& f, std::size_t dim,
                      const std::vector<Vec>& vectors) {
  Matrix m(f, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  return m.rank();
}

bool same_span(const Field& f, std::size_t dim, const std::vector<Vec>& a,
               const std::vector<Vec>& b) {
  std::size_t ra = span_rank(f, dim, a);
  std::size_t rb = span_rank(f, dim, b);
  if (ra != rb) return false;
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return span_rank(f, dim, all) == ra;
}

}  // namespace superschur
