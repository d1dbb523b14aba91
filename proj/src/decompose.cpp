#include "tiltkit/decompose.hpp"

#include "tiltkit/error.hpp"
#include "tiltkit/polynomial.hpp"

namespace tiltkit {

EndomorphismRing endomorphism_ring(const Representation& m) {
  const Field& f = m.field();
  if (f.is_prime() && f.characteristic() <= m.dim())
    throw FieldError("trace-form radical of End(M) needs characteristic above dim M");
  HomSpace h = hom_space(m, m);
  const std::size_t e = h.dim();
  Matrix gram(f, e, e);
  for (std::size_t i = 0; i < e; ++i)
    for (std::size_t j = i; j < e; ++j) {
      Scalar t = (h.basis_matrix(i) * h.basis_matrix(j)).trace();
      gram.set(i, j, t);
      gram.set(j, i, t);
    }
  Matrix rad = e ? gram.kernel() : Matrix(f, 0, 0);
  ColumnBasis cb(f, e, rad);
  const std::size_t residue = e - cb.dim();
  return {std::move(h), std::move(cb), residue};
}

bool is_split_local(const Representation& m) { return m.dim() > 0 && endomorphism_ring(m).residue_dim == 1; }

namespace {

Matrix matrix_power(Matrix a, std::size_t e) {
  Matrix r = Matrix::identity(a.field(), a.rows());
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

struct Split {
  Matrix first, second;  // column bases of complementary submodules
};

// Tries to split m by the Fitting decomposition of phi - lambda.
std::optional<Split> fitting_split(const Matrix& phi, std::mt19937_64& rng) {
  const Field& f = phi.field();
  const auto p = static_cast<std::int64_t>(f.characteristic());
  const std::size_t n = phi.rows();
  auto minpoly = poly::minimal_polynomial(phi);
  for (auto lambda : poly::roots(minpoly, p, rng)) {
    Matrix psi = phi - Matrix::identity(f, n).scaled(Scalar(f, static_cast<long>(lambda)));
    Matrix pw = matrix_power(psi, n);
    Matrix ker = pw.kernel();
    if (ker.cols() == 0 || ker.cols() == n) continue;
    return Split{ker, pw.column_space()};
  }
  return std::nullopt;
}

void split_recursive(const Summand& s, std::mt19937_64& rng, std::vector<Summand>& out) {
  const Representation& m = s.module;
  if (m.dim() == 0) return;
  EndomorphismRing end = endomorphism_ring(m);
  if (end.residue_dim == 1) {
    out.push_back(s);
    return;
  }
  const Field& f = m.field();
  if (!f.is_prime()) throw FieldError("decomposition requires a prime field");
  const std::size_t e = end.space.dim();
  const std::size_t trials = e + 64;
  for (std::size_t t = 0; t < trials; ++t) {
    Matrix coeffs = Matrix::random(f, e, 1, rng);
    Matrix phi = end.space.combination(coeffs).matrix();
    auto sp = fitting_split(phi, rng);
    if (!sp) continue;
    Matrix basis = Matrix::hstack(f, m.dim(), {sp->first, sp->second});
    auto inv = basis.inverse();
    if (!inv) throw InvariantError("Fitting summands are not complementary");
    const std::size_t k = sp->first.cols();
    Submodule a = submodule(m, sp->first), b = submodule(m, sp->second);
    Morphism pa(m, a.module, inv->block(0, 0, k, m.dim()));
    Morphism pb(m, b.module, inv->block(k, 0, m.dim() - k, m.dim()));
    Summand sa{a.module, a.inclusion.then(s.inclusion), s.projection.then(pa)};
    Summand sb{b.module, b.inclusion.then(s.inclusion), s.projection.then(pb)};
    split_recursive(sa, rng, out);
    split_recursive(sb, rng, out);
    return;
  }
  // No eigenvalue in the prime field splits M: End(M)/rad is a division algebra.
  out.push_back(s);
}

}  // namespace

Decomposition decompose(const Representation& m, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::vector<Summand> parts;
  split_recursive({m, Morphism::identity(m), Morphism::identity(m)}, rng, parts);
  Decomposition d;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::size_t cls = d.representatives.size();
    for (std::size_t c = 0; c < d.representatives.size(); ++c)
      if (is_isomorphic(parts[d.representatives[c]].module, parts[i].module, seed).holds()) {
        cls = c;
        break;
      }
    if (cls == d.representatives.size()) {
      d.representatives.push_back(i);
      d.multiplicities.push_back(0);
    }
    d.iso_class.push_back(cls);
    ++d.multiplicities[cls];
  }
  d.summands = std::move(parts);
  return d;
}

IsoResult is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed) {
  IsoResult r;
  if (!same_algebra(a.algebra(), b.algebra()) || a.dim() != b.dim() || a.dim_vector() != b.dim_vector()) {
    r.verdict = IsoVerdict::not_isomorphic;
    return r;
  }
  if (a.dim() == 0) {
    r.verdict = IsoVerdict::isomorphic;
    r.witness = Morphism::zero(a, b);
    return r;
  }
  HomSpace h = hom_space(a, b);
  if (h.dim() == 0) {
    r.verdict = IsoVerdict::not_isomorphic;
    return r;
  }
  for (std::size_t k = 0; k < h.dim(); ++k)
    if (h.basis_matrix(k).is_invertible()) {
      r.verdict = IsoVerdict::isomorphic;
      r.witness = h.element(k);
      return r;
    }
  // If a is indecomposable, an isomorphism forces some basis element to be
  // one: id = sum of g_j f_i, and a composite outside the radical of the
  // local ring End(a) makes f_i split mono.
  bool a_local = is_split_local(a), b_local = is_split_local(b);
  if (a_local || b_local) {
    r.verdict = IsoVerdict::not_isomorphic;
    return r;
  }
  auto rng = make_rng(seed);
  const Field& f = a.field();
  for (std::size_t t = 0; t < h.dim() + 64; ++t) {
    Morphism cand = h.combination(Matrix::random(f, h.dim(), 1, rng));
    if (cand.matrix().is_invertible()) {
      r.verdict = IsoVerdict::isomorphic;
      r.witness = cand;
      return r;
    }
  }
  if (hom_dim(a, a) != hom_dim(b, b) || hom_dim(b, a) != h.dim()) {
    r.verdict = IsoVerdict::not_isomorphic;
    return r;
  }
  if (f.is_prime()) {
    // Compare Krull-Schmidt multisets.
    Decomposition da = decompose(a, seed), db = decompose(b, seed + 1);
    std::vector<bool> used(db.summands.size(), false);
    for (const auto& s : da.summands) {
      bool matched = false;
      for (std::size_t j = 0; j < db.summands.size() && !matched; ++j)
        if (!used[j] && is_isomorphic(s.module, db.summands[j].module, seed).holds()) used[j] = matched = true;
      if (!matched) {
        r.verdict = IsoVerdict::not_isomorphic;
        return r;
      }
    }
    // Same multisets but the random search missed: assemble the witness.
    Matrix w(f, b.dim(), a.dim());
    std::fill(used.begin(), used.end(), false);
    for (const auto& s : da.summands)
      for (std::size_t j = 0; j < db.summands.size(); ++j) {
        if (used[j]) continue;
        auto iso = is_isomorphic(s.module, db.summands[j].module, seed);
        if (!iso.holds()) continue;
        used[j] = true;
        w = w + db.summands[j].inclusion.matrix() * iso.witness->matrix() * s.projection.matrix();
        break;
      }
    r.verdict = IsoVerdict::isomorphic;
    r.witness = Morphism(a, b, w);
    return r;
  }
  r.verdict = IsoVerdict::inconclusive;
  return r;
}

bool in_add(const Representation& candidate, const Representation& m) {
  if (candidate.dim() == 0) return true;
  HomSpace to = hom_space(candidate, m), from = hom_space(m, candidate);
  std::vector<Matrix> cols;
  for (std::size_t i = 0; i < to.dim(); ++i)
    for (std::size_t j = 0; j < from.dim(); ++j) cols.push_back((from.basis_matrix(j) * to.basis_matrix(i)).vec());
  const std::size_t n = candidate.dim() * candidate.dim();
  if (cols.empty()) return false;
  ColumnBasis span(candidate.field(), n, Matrix::hstack(candidate.field(), n, cols));
  return span.contains(Matrix::identity(candidate.field(), candidate.dim()).vec());
}

std::size_t summands_outside_add(const Representation& x, const Representation& m, std::uint64_t seed) {
  std::size_t count = 0;
  for (const auto& s : decompose(x, seed).summands)
    if (!in_add(s.module, m)) ++count;
  return count;
}

}  // namespace tiltkit
