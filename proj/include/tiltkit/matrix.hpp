#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tiltkit/field.hpp"

namespace tiltkit {

// Dense row-major matrix over GF(p) or Q. Only one of the two storage
// vectors is populated, chosen by the field.
class Matrix {
 public:
  struct Rref;

  Matrix() : Matrix(Field::rational(), 0, 0) {}
  Matrix(const Field& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_ints(const Field& f, std::size_t rows, std::size_t cols, const std::vector<long>& entries);
  static Matrix unit_column(const Field& f, std::size_t n, std::size_t i);
  static Matrix random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void set(std::size_t i, std::size_t j, long v);
  bool entry_is_zero(std::size_t i, std::size_t j) const;

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  // this += s * o
  void add_scaled(const Matrix& o, const Scalar& s);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  // Column-major flattening, so vec(A X B) = (B^T kron A) vec(X).
  Matrix vec() const;
  static Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

  static Matrix hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts);
  static Matrix vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts);
  static Matrix block_diag(const Field& f, const std::vector<Matrix>& parts);
  static Matrix kron(const Matrix& a, const Matrix& b);

  Rref rref() const;
  std::size_t rank() const;
  // Columns form a basis of {x : A x = 0}.
  Matrix kernel() const;
  // Pivot columns of the matrix itself, so a basis of its column space drawn from its columns.
  std::vector<std::size_t> pivot_columns() const;
  Matrix column_space() const { return select_cols(pivot_columns()); }
  std::optional<Matrix> solve(const Matrix& b) const;
  std::optional<Matrix> inverse() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  Scalar determinant() const;
  Scalar trace() const;

  std::string to_string() const;

  // Raw storage, used by the kernels.
  std::vector<std::int64_t>& mod_data() { return mod_; }
  const std::vector<std::int64_t>& mod_data() const { return mod_; }
  std::vector<mpq_class>& rat_data() { return rat_; }
  const std::vector<mpq_class>& rat_data() const { return rat_; }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> mod_;
  std::vector<mpq_class> rat_;
};

struct Matrix::Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

// Basis of a subspace of k^n, stored as columns, with coordinate extraction.
class ColumnBasis {
 public:
  ColumnBasis() = default;
  // Spanning columns need not be independent; a maximal independent subset is kept.
  ColumnBasis(const Field& f, std::size_t ambient, const Matrix& spanning);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& v) const;
  // Coordinates of every column of v; nullopt if some column is outside.
  std::optional<Matrix> coords(const Matrix& v) const;
  Matrix coords_or_throw(const Matrix& v) const;
  // Indices of standard basis vectors completing the basis to k^n.
  std::vector<std::size_t> complement_units() const;

 private:
  Field field_ = Field::rational();
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;
  Matrix pivot_inverse_;
};

// k^n = U + C with U a subspace and C spanned by standard vectors. Gives
// coordinates in U and in the quotient k^n / U.
class SplitBasis {
 public:
  SplitBasis() = default;
  SplitBasis(const Field& f, std::size_t ambient, const Matrix& sub_spanning);

  std::size_t sub_dim() const { return sub_.cols(); }
  std::size_t quotient_dim() const { return complement_.cols(); }
  const Matrix& sub() const { return sub_; }
  const Matrix& complement() const { return complement_; }
  // Rows [0, sub_dim) hold U coordinates, the rest quotient coordinates.
  Matrix split_coords(const Matrix& v) const { return inverse_ * v; }
  Matrix quotient_coords(const Matrix& v) const;
  const Matrix& inverse() const { return inverse_; }

 private:
  Matrix sub_, complement_, inverse_;
};

enum class KernelMode { automatic, serial, parallel };

void set_kernel_mode(KernelMode mode);
KernelMode kernel_mode();
void set_thread_count(int n);

std::mt19937_64 make_rng(std::uint64_t seed);
Scalar random_scalar(const Field& f, std::mt19937_64& rng);

}  // namespace tiltkit
