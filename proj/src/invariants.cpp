#include "tiltkit/invariants.hpp"

#include "tiltkit/error.hpp"

namespace tiltkit {

AlgebraInvariants invariants(const AlgebraPtr& alg, std::size_t cap) {
  AlgebraInvariants out;
  out.name = alg->name();
  out.dim = alg->dim();
  const auto& reps = alg->class_representatives();
  out.simples = reps.size();
  out.cartan = cartan_matrix(*alg);
  out.cartan_det = integer_determinant(out.cartan);
  out.gl_dim = global_dim(alg, cap);
  std::vector<Representation> simples;
  for (auto v : reps) simples.push_back(simple_module(alg, v));
  out.ext1.assign(reps.size(), std::vector<std::size_t>(reps.size(), 0));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Resolution r = projective_resolution(simples[i], 2);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      out.ext1[i][j] = ext_dims(r, simples[j], 1)[1];
      out.arrows += out.ext1[i][j];
    }
  }
  return out;
}

Comparison compare(const AlgebraInvariants& a, const AlgebraInvariants& b, std::size_t n) {
  Comparison c;
  c.simples_equal = a.simples == b.simples;
  if (!c.simples_equal)
    c.mismatches.push_back("simples " + std::to_string(a.simples) + " != " + std::to_string(b.simples));
  c.det_equal = a.cartan_det == b.cartan_det;
  if (!c.det_equal) c.mismatches.push_back("cartan_det " + a.cartan_det.get_str() + " != " + b.cartan_det.get_str());
  if (a.gl_dim.value && b.gl_dim.value) {
    std::size_t x = *a.gl_dim.value, y = *b.gl_dim.value;
    c.gl_gap = x > y ? x - y : y - x;
    c.gap_ok = *c.gl_gap <= n;
  } else {
    c.gap_ok = !a.gl_dim.finite() && !b.gl_dim.finite();
  }
  if (!c.gap_ok)
    c.mismatches.push_back("gl_dim " + a.gl_dim.to_string() + " vs " + b.gl_dim.to_string() + " exceeds gap " +
                           std::to_string(n));
  c.notes.push_back("fin.dim: finiteness agrees across a derived equivalence (claimed, not verified)");
  return c;
}

StableEndAlgebra stable_end(const Representation& m, std::uint64_t seed) {
  if (m.dim() == 0) throw InputError("stable_end of the zero module");
  const AlgebraPtr& alg = m.algebra();
  const Field& f = m.field();
  StableEndAlgebra out;
  out.end = end_algebra(indecomposable_summands(m, seed), "End(" + m.label() + ")");
  const Representation& v = out.end.module;
  std::vector<Matrix> cols;
  for (auto p : alg->class_representatives()) {
    Representation pv = vertex_projective(alg, p).module;
    HomSpace to_p = hom_space(v, pv), from_p = hom_space(pv, v);
    for (std::size_t i = 0; i < to_p.dim(); ++i)
      for (std::size_t j = 0; j < from_p.dim(); ++j)
        cols.push_back(out.end.coords_of(from_p.basis_matrix(j) * to_p.basis_matrix(i)));
  }
  const std::size_t d = out.end.algebra->dim();
  out.ideal = ColumnBasis(f, d, cols.empty() ? Matrix(f, d, 0) : Matrix::hstack(f, d, cols)).basis();
  if (out.ideal.cols() < d) out.quotient = quotient_algebra(out.end.algebra, out.ideal, "StableEnd(" + m.label() + ")");
  return out;
}

}  // namespace tiltkit
