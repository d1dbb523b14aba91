#include "tiltkit/kernels.hpp"

#include <omp.h>

#include <utility>

#include "ops.hpp"
#include "tiltkit/error.hpp"

namespace tiltkit::kernels {

namespace {

using detail::ModOps;
using detail::RatOps;

void check_shapes(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw InvariantError("multiply: field mismatch");
  if (a.cols() != b.rows()) throw InvariantError("multiply: shape mismatch");
}

// Row i of C = A * B. Skips zero entries of A, which are common here.
void mod_row(const ModOps& ops, const std::int64_t* arow, const std::vector<std::int64_t>& b, std::size_t k,
             std::size_t m, std::int64_t* crow, std::vector<std::uint64_t>& acc) {
  acc.assign(m, 0);
  int pending = 0;
  for (std::size_t t = 0; t < k; ++t) {
    std::uint64_t x = static_cast<std::uint64_t>(arow[t]);
    if (x == 0) continue;
    const std::int64_t* brow = b.data() + t * m;
    for (std::size_t j = 0; j < m; ++j) acc[j] += x * static_cast<std::uint64_t>(brow[j]);
    // Products are below 2^62, so three of them fit before reduction.
    if (++pending == 3) {
      for (std::size_t j = 0; j < m; ++j) acc[j] %= static_cast<std::uint64_t>(ops.p);
      pending = 0;
    }
  }
  for (std::size_t j = 0; j < m; ++j) crow[j] = static_cast<std::int64_t>(acc[j] % static_cast<std::uint64_t>(ops.p));
}

void rat_row(const mpq_class* arow, const std::vector<mpq_class>& b, std::size_t k, std::size_t m, mpq_class* crow) {
  mpq_class tmp;
  for (std::size_t t = 0; t < k; ++t) {
    if (sgn(arow[t]) == 0) continue;
    const mpq_class* brow = b.data() + t * m;
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(brow[j]) == 0) continue;
      tmp = arow[t] * brow[j];
      crow[j] += tmp;
    }
  }
}

Matrix multiply_impl(const Matrix& a, const Matrix& b, bool parallel) {
  check_shapes(a, b);
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Matrix c(a.field(), n, m);
  if (n == 0 || m == 0 || k == 0) return c;
  if (a.field().is_prime()) {
    ModOps ops{static_cast<std::int64_t>(a.field().characteristic())};
    const auto& ad = a.mod_data();
    const auto& bd = b.mod_data();
    auto& cd = c.mod_data();
#pragma omp parallel if (parallel)
    {
      std::vector<std::uint64_t> acc;
#pragma omp for schedule(static)
      for (std::size_t i = 0; i < n; ++i) mod_row(ops, ad.data() + i * k, bd, k, m, cd.data() + i * m, acc);
    }
  } else {
    const auto& ad = a.rat_data();
    const auto& bd = b.rat_data();
    auto& cd = c.rat_data();
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < n; ++i) rat_row(ad.data() + i * k, bd, k, m, cd.data() + i * m);
  }
  return c;
}

// Gauss-Jordan elimination. In the parallel version the elimination of the
// non-pivot rows for each pivot is split across threads.
template <class Ops>
Matrix::Rref rref_impl(const Ops& ops, const Matrix& in, bool parallel) {
  using T = typename Ops::T;
  Matrix m = in;
  auto& d = Ops::data(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(d[i * cols + c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(d[piv * cols + j], d[r * cols + j]);
    T inv = ops.inv(d[r * cols + c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (ops.is_zero(d[r * cols + j])) continue;
      d[r * cols + j] = ops.mul(d[r * cols + j], inv);
      support.push_back(j);
    }
    const T* prow = d.data() + r * cols;
    const std::size_t pr = r;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      T* row = d.data() + i * cols;
      if (ops.is_zero(row[c])) continue;
      T f = row[c];
      for (std::size_t j : support) row[j] = ops.sub_mul(row[j], f, prow[j]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Matrix::Rref rref_dispatch(const Matrix& a, bool parallel) {
  if (a.field().is_prime()) return rref_impl(ModOps{static_cast<std::int64_t>(a.field().characteristic())}, a, parallel);
  return rref_impl(RatOps{}, a, parallel);
}

}  // namespace

Matrix multiply_serial(const Matrix& a, const Matrix& b) { return multiply_impl(a, b, false); }
Matrix multiply_parallel(const Matrix& a, const Matrix& b) { return multiply_impl(a, b, true); }
Matrix::Rref rref_serial(const Matrix& a) { return rref_dispatch(a, false); }
Matrix::Rref rref_parallel(const Matrix& a) { return rref_dispatch(a, true); }

}  // namespace tiltkit::kernels
