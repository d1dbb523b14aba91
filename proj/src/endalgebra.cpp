#include "tiltkit/endalgebra.hpp"

#include "tiltkit/decompose.hpp"
#include "tiltkit/error.hpp"

namespace tiltkit {

Matrix EndAlgebra::element_matrix(const Matrix& coords) const {
  Matrix m(module.field(), module.dim(), module.dim());
  for (std::size_t k = 0; k < realization.size(); ++k)
    if (!coords.entry_is_zero(k, 0)) m.add_scaled(realization[k], coords.at(k, 0));
  return m;
}

Matrix EndAlgebra::coords_of(const Matrix& endo) const { return realization_vecs.coords_or_throw(endo.vec()); }

EndAlgebra end_algebra(const std::vector<Representation>& summands, const std::string& name) {
  if (summands.empty()) throw InputError("end_algebra of an empty sum");
  const AlgebraPtr& base = summands.front().algebra();
  const Field& f = base->field();
  DirectSum ds = direct_sum(base, summands);
  EndAlgebra out;
  out.module = ds.module;
  out.summands = summands;
  out.inclusions = ds.inclusions;
  out.projections = ds.projections;
  const std::size_t k = summands.size();
  const std::size_t n = ds.module.dim();
  std::vector<std::string> labels;
  std::vector<std::size_t> idem_index(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      HomSpace h = hom_space(summands[i], summands[j]);
      std::vector<Matrix> block;
      if (i == j) {
        // Identity first, then a complement of it from the hom basis.
        Matrix id = Matrix::identity(f, summands[i].dim());
        block.push_back(id);
        std::vector<Matrix> cols{id.vec()};
        for (std::size_t b = 0; b < h.dim(); ++b) {
          cols.push_back(h.basis_matrix(b).vec());
          Matrix span = Matrix::hstack(f, id.rows() * id.cols(), cols);
          if (span.rank() == cols.size())
            block.push_back(h.basis_matrix(b));
          else
            cols.pop_back();
        }
        if (block.size() != h.dim()) throw InvariantError("identity outside End(V_i)");
        idem_index[i] = out.realization.size();
      } else {
        for (std::size_t b = 0; b < h.dim(); ++b) block.push_back(h.basis_matrix(b));
      }
      for (std::size_t b = 0; b < block.size(); ++b) {
        out.realization.push_back(ds.inclusions[j].matrix() * block[b] * ds.projections[i].matrix());
        labels.push_back(i == j && b == 0 ? "e" + std::to_string(i)
                                          : "h" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(b));
      }
    }
  const std::size_t d = out.realization.size();
  std::vector<Matrix> vecs;
  for (const auto& r : out.realization) vecs.push_back(r.vec());
  out.realization_vecs = ColumnBasis(f, n * n, Matrix::hstack(f, n * n, vecs));
  if (out.realization_vecs.dim() != d) throw InvariantError("End basis dependent");
  AlgebraTable::Spec spec;
  spec.name = name;
  spec.field = f;
  spec.labels = labels;
  spec.left_mult.assign(d, Matrix(f, d, d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Matrix prod = out.realization[b] * out.realization[a];  // a followed by b
      if (prod.is_zero()) continue;
      spec.left_mult[a].set_block(0, b, out.coords_of(prod));
    }
  for (std::size_t i = 0; i < k; ++i) spec.idempotents.push_back(Matrix::unit_column(f, d, idem_index[i]));
  out.algebra = std::make_shared<const AlgebraTable>(std::move(spec));
  return out;
}

std::vector<Representation> indecomposable_summands(const Representation& m, std::uint64_t seed) {
  std::vector<Representation> out;
  if (m.dim() > 0 && is_split_local(m)) return {m};
  for (auto& s : decompose(m, seed).summands) out.push_back(s.module);
  return out;
}

std::vector<Representation> distinct_indecomposables(const std::vector<Representation>& mods, std::uint64_t seed) {
  std::vector<Representation> out;
  for (const auto& m : mods) {
    if (m.dim() == 0) continue;
    for (auto& part : indecomposable_summands(m, seed)) {
      bool seen = false;
      for (const auto& o : out) seen = seen || is_isomorphic(part, o, seed).holds();
      if (!seen) out.push_back(std::move(part));
    }
  }
  return out;
}

EndAlgebra end_algebra(const Representation& m, const std::string& name, std::uint64_t seed) {
  return end_algebra(indecomposable_summands(m, seed), name);
}

HomModule hom_module(const EndAlgebra& lam, const Representation& z) {
  HomSpace h = hom_space(lam.module, z);
  const Field& f = z.field();
  std::vector<Matrix> gens;
  for (const auto& g : lam.algebra->generators()) {
    Matrix m = lam.element_matrix(g.element);
    Matrix act(f, h.dim(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) act.set_block(0, k, h.coords_or_throw(h.basis_matrix(k) * m));
    gens.push_back(std::move(act));
  }
  Representation mod(lam.algebra, h.dim(), std::move(gens), "Hom(V," + z.label() + ")");
  return {std::move(mod), std::move(h)};
}

Morphism hom_map(const HomModule& src, const HomModule& dst, const Morphism& t) {
  return Morphism(src.module, dst.module, post_map(src.space, dst.space, t.matrix()));
}

}  // namespace tiltkit
