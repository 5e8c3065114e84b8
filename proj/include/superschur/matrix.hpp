#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superschur/field.hpp"

namespace superschur {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a*x

/// Dense exact matrix over Q or GF(p).
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_columns(const Field& f, std::size_t rows,
                             const std::vector<Vec>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  Vec apply(std::span<const Scalar> v) const;  // matrix * column vector
  Vec column(std::size_t j) const;
  Vec flatten() const;  // row-major vec() of the matrix

  /// Reduced row echelon form.  Over GF(p) by Gaussian elimination, over Q by
  /// fraction-free Bareiss forward elimination followed by rational
  /// normalization of the pivot rows.
  struct Echelon;
  Echelon reduced_echelon() const;

  std::size_t rank() const;
  /// Basis of the right kernel {x : Ax = 0}.
  std::vector<Vec> kernel_basis() const;
  /// One solution of Ax = b, free variables set to zero.
  std::optional<Vec> solve(std::span<const Scalar> b) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct Matrix::Echelon {
  Matrix rref;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
  std::size_t rank;
};

/// Precomputed elimination transform for solving A x = b repeatedly with the
/// same A (column-span membership, coordinates in a spanning set).
class SolveEngine {
 public:
  explicit SolveEngine(Matrix a);

  std::size_t rank() const { return rank_; }
  bool contains(std::span<const Scalar> b) const;
  std::optional<Vec> solve(std::span<const Scalar> b) const;

 private:
  Matrix a_;
  Matrix transform_;  // T with (T*A) in reduced echelon form
  Matrix rref_;
  std::vector<std::size_t> pivots_;
  std::size_t rank_;
};

/// Signed permutation structure of a square matrix (one entry +-1 per row
/// and column), when it has one.
struct SignedPerm {
  std::vector<std::size_t> image;  // column c -> row image[c]
  std::vector<int> sign;           // +-1 per column

  /// this applied after other (matrix product this * other)
  SignedPerm after(const SignedPerm& other) const;
};
std::optional<SignedPerm> as_signed_permutation(const Matrix& m);

/// Rank of the span of a set of vectors.
std::size_t span_rank(const Field& f, std::size_t dim,
                      const std::vector<Vec>& vectors);
/// True if the two sets of vectors span the same subspace.
bool same_span(const Field& f, std::size_t dim, const std::vector<Vec>& a,
               const std::vector<Vec>& b);

}  // namespace superschur
