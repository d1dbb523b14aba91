#include "tiltkit/matrix.hpp"

#include <omp.h>

#include <atomic>
#include <sstream>
#include <utility>

#include "ops.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/kernels.hpp"

namespace tiltkit {

using detail::dispatch;

namespace {
std::atomic<KernelMode> g_mode{KernelMode::automatic};

bool use_parallel(std::size_t work) {
  switch (g_mode.load()) {
    case KernelMode::serial:
      return false;
    case KernelMode::parallel:
      return true;
    case KernelMode::automatic:
      break;
  }
  return work >= kernels::kParallelThreshold && omp_get_max_threads() > 1;
}

void require_same(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field())) throw InvariantError(std::string(what) + ": field mismatch");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvariantError(std::string(what) + ": shape mismatch");
}
}  // namespace

void set_kernel_mode(KernelMode mode) { g_mode = mode; }
KernelMode kernel_mode() { return g_mode.load(); }
void set_thread_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL); }

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  if (f.is_prime()) {
    std::uniform_int_distribution<long> dist(0, static_cast<long>(f.characteristic()) - 1);
    return Scalar(f, dist(rng));
  }
  std::uniform_int_distribution<long> dist(-7, 7);
  return Scalar(f, dist(rng));
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols) {
  if (f.is_prime())
    mod_.assign(rows * cols, 0);
  else
    rat_.resize(rows * cols);
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_ints(const Field& f, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  if (entries.size() != rows * cols) throw InvariantError("from_ints: wrong entry count");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, entries[i * cols + j]);
  return m;
}

Matrix Matrix::unit_column(const Field& f, std::size_t n, std::size_t i) {
  Matrix m(f, n, 1);
  m.set(i, 0, 1);
  return m;
}

Matrix Matrix::random(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_scalar(f, rng));
  return m;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  Scalar s(field_);
  if (field_.is_prime())
    s.r_ = mod_[i * cols_ + j];
  else
    s.q_ = rat_[i * cols_ + j];
  return s;
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& s) {
  if (field_.is_prime())
    mod_[i * cols_ + j] = s.residue();
  else
    rat_[i * cols_ + j] = s.rational();
}

void Matrix::set(std::size_t i, std::size_t j, long v) { set(i, j, Scalar(field_, v)); }

bool Matrix::entry_is_zero(std::size_t i, std::size_t j) const {
  return field_.is_prime() ? mod_[i * cols_ + j] == 0 : sgn(rat_[i * cols_ + j]) == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_prime()) {
    for (auto v : mod_)
      if (v != 0) return false;
  } else {
    for (const auto& v : rat_)
      if (sgn(v) != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && rat_ == o.rat_;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(*this, o, "add");
  Matrix r = *this;
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(r);
    const auto& e = decltype(ops)::data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.add(d[i], e[i]);
  });
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same(*this, o, "sub");
  Matrix r = *this;
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(r);
    const auto& e = decltype(ops)::data(o);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = ops.sub(d[i], e[i]);
  });
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  dispatch(field_, [&](auto ops) {
    for (auto& v : decltype(ops)::data(r)) v = ops.neg(v);
  });
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (use_parallel(rows_ * o.cols_)) return kernels::multiply_parallel(*this, o);
  return kernels::multiply_serial(*this, o);
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  if (field_.is_prime()) {
    detail::ModOps ops{static_cast<std::int64_t>(field_.characteristic())};
    for (auto& v : r.mod_) v = ops.mul(v, s.residue());
  } else {
    for (auto& v : r.rat_) v *= s.rational();
  }
  return r;
}

void Matrix::add_scaled(const Matrix& o, const Scalar& s) {
  require_same(*this, o, "add_scaled");
  if (s.is_zero()) return;
  if (field_.is_prime()) {
    detail::ModOps ops{static_cast<std::int64_t>(field_.characteristic())};
    std::int64_t neg = ops.neg(s.residue());
    for (std::size_t i = 0; i < mod_.size(); ++i) mod_[i] = ops.sub_mul(mod_[i], neg, o.mod_[i]);
  } else {
    for (std::size_t i = 0; i < rat_.size(); ++i)
      if (sgn(o.rat_[i]) != 0) rat_[i] += s.rational() * o.rat_[i];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(t);
    const auto& e = decltype(ops)::data(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) d[j * rows_ + i] = e[i * cols_ + j];
  });
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvariantError("block out of range");
  Matrix b(field_, nr, nc);
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(b);
    const auto& e = decltype(ops)::data(*this);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) d[i * nc + j] = e[(r0 + i) * cols_ + c0 + j];
  });
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (!(m.field_ == field_)) throw InvariantError("set_block: field mismatch");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw InvariantError("set_block out of range");
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(*this);
    const auto& e = decltype(ops)::data(m);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = e[i * m.cols_ + j];
  });
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k) r.set_block(k, 0, row(idx[k]));
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(field_, rows_, idx.size());
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(r);
    const auto& e = decltype(ops)::data(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) d[i * idx.size() + k] = e[i * cols_ + idx[k]];
  });
  return r;
}

Matrix Matrix::vec() const {
  Matrix v(field_, rows_ * cols_, 1);
  dispatch(field_, [&](auto ops) {
    auto& d = decltype(ops)::data(v);
    const auto& e = decltype(ops)::data(*this);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) d[j * rows_ + i] = e[i * cols_ + j];
  });
  return v;
}

Matrix Matrix::unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows_ != rows * cols || v.cols_ != 1) throw InvariantError("unvec: shape mismatch");
  Matrix m(v.field_, rows, cols);
  dispatch(v.field_, [&](auto ops) {
    auto& d = decltype(ops)::data(m);
    const auto& e = decltype(ops)::data(v);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) d[i * cols + j] = e[j * rows + i];
  });
  return m;
}

Matrix Matrix::hstack(const Field& f, std::size_t rows, const std::vector<Matrix>& parts) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows_ != rows) throw InvariantError("hstack: row mismatch");
    cols += p.cols_;
  }
  Matrix m(f, rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::vstack(const Field& f, std::size_t cols, const std::vector<Matrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols_ != cols) throw InvariantError("vstack: column mismatch");
    rows += p.rows_;
  }
  Matrix m(f, rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows_;
  }
  return m;
}

Matrix Matrix::block_diag(const Field& f, const std::vector<Matrix>& parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto& p : parts) {
    rows += p.rows_;
    cols += p.cols_;
  }
  Matrix m(f, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    m.set_block(r, c, p);
    r += p.rows_;
    c += p.cols_;
  }
  return m;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_)) throw InvariantError("kron: field mismatch");
  Matrix k(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  dispatch(a.field_, [&](auto ops) {
    auto& d = decltype(ops)::data(k);
    const auto& x = decltype(ops)::data(a);
    const auto& y = decltype(ops)::data(b);
    const std::size_t kc = k.cols_;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& s = x[i * a.cols_ + j];
        if (ops.is_zero(s)) continue;
        for (std::size_t u = 0; u < b.rows_; ++u)
          for (std::size_t v = 0; v < b.cols_; ++v) {
            const auto& t = y[u * b.cols_ + v];
            if (ops.is_zero(t)) continue;
            d[(i * b.rows_ + u) * kc + j * b.cols_ + v] = ops.mul(s, t);
          }
      }
  });
  return k;
}

Matrix::Rref Matrix::rref() const {
  if (use_parallel(rows_ * cols_)) return kernels::rref_parallel(*this);
  return kernels::rref_serial(*this);
}

std::size_t Matrix::rank() const { return rref().pivots.size(); }

Matrix Matrix::kernel() const {
  auto [red, piv] = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix k(field_, cols_, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t c = free_cols[f];
    k.set(c, f, 1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!red.entry_is_zero(r, c)) k.set(piv[r], f, -red.at(r, c));
  }
  return k;
}

std::vector<std::size_t> Matrix::pivot_columns() const { return rref().pivots; }

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (b.rows_ != rows_) throw InvariantError("solve: shape mismatch");
  Matrix aug = hstack(field_, rows_, {*this, b});
  auto [red, piv] = aug.rref();
  Matrix x(field_, cols_, b.cols_);
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= cols_) return std::nullopt;
    for (std::size_t j = 0; j < b.cols_; ++j) x.set(piv[r], j, red.at(r, cols_ + j));
  }
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug = hstack(field_, rows_, {*this, identity(field_, rows_)});
  auto [red, piv] = aug.rref();
  if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] >= cols_)) return std::nullopt;
  return red.block(0, cols_, rows_, cols_);
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw InvariantError("determinant of non-square matrix");
  Matrix m = *this;
  Scalar det(field_, 1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = rows_;
    for (std::size_t i = c; i < rows_; ++i)
      if (!m.entry_is_zero(i, c)) {
        piv = i;
        break;
      }
    if (piv == rows_) return Scalar(field_);
    if (piv != c) {
      for (std::size_t j = 0; j < cols_; ++j) {
        Scalar t = m.at(piv, j);
        m.set(piv, j, m.at(c, j));
        m.set(c, j, t);
      }
      det = -det;
    }
    Scalar p = m.at(c, c);
    det = det * p;
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (m.entry_is_zero(i, c)) continue;
      Scalar f = m.at(i, c) / p;
      for (std::size_t j = c; j < cols_; ++j) m.set(i, j, m.at(i, j) - f * m.at(c, j));
    }
  }
  return det;
}

Scalar Matrix::trace() const {
  Scalar t(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = t + at(i, i);
  return t;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

ColumnBasis::ColumnBasis(const Field& f, std::size_t ambient, const Matrix& spanning)
    : field_(f), ambient_(ambient), basis_(f, ambient, 0) {
  if (spanning.rows() != ambient) throw InvariantError("ColumnBasis: ambient mismatch");
  if (spanning.cols() > 0) basis_ = spanning.column_space();
  if (basis_.cols() == 0) {
    pivot_inverse_ = Matrix(f, 0, 0);
    return;
  }
  pivot_rows_ = basis_.transpose().pivot_columns();
  auto inv = basis_.select_rows(pivot_rows_).inverse();
  if (!inv) throw InvariantError("ColumnBasis: pivot block singular");
  pivot_inverse_ = std::move(*inv);
}

std::optional<Matrix> ColumnBasis::coords(const Matrix& v) const {
  if (v.rows() != ambient_) throw InvariantError("ColumnBasis::coords: ambient mismatch");
  if (dim() == 0) {
    if (!v.is_zero()) return std::nullopt;
    return Matrix(field_, 0, v.cols());
  }
  Matrix c = pivot_inverse_ * v.select_rows(pivot_rows_);
  if (!(basis_ * c == v)) return std::nullopt;
  return c;
}

Matrix ColumnBasis::coords_or_throw(const Matrix& v) const {
  auto c = coords(v);
  if (!c) throw InvariantError("vector outside subspace");
  return *c;
}

bool ColumnBasis::contains(const Matrix& v) const { return coords(v).has_value(); }

std::vector<std::size_t> ColumnBasis::complement_units() const {
  Matrix aug = Matrix::hstack(field_, ambient_, {basis_, Matrix::identity(field_, ambient_)});
  std::vector<std::size_t> out;
  for (auto p : aug.pivot_columns())
    if (p >= dim()) out.push_back(p - dim());
  return out;
}

SplitBasis::SplitBasis(const Field& f, std::size_t ambient, const Matrix& sub_spanning) {
  ColumnBasis cb(f, ambient, sub_spanning);
  sub_ = cb.basis();
  std::vector<Matrix> comp;
  for (auto u : cb.complement_units()) comp.push_back(Matrix::unit_column(f, ambient, u));
  complement_ = Matrix::hstack(f, ambient, comp);
  auto inv = Matrix::hstack(f, ambient, {sub_, complement_}).inverse();
  if (!inv) throw InvariantError("SplitBasis: not a basis");
  inverse_ = std::move(*inv);
}

Matrix SplitBasis::quotient_coords(const Matrix& v) const {
  Matrix all = inverse_ * v;
  return all.block(sub_dim(), 0, quotient_dim(), v.cols());
}

}  // namespace tiltkit
