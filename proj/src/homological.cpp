#include "tiltkit/homological.hpp"

#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/error.hpp"

namespace tiltkit {

namespace {

ProjectiveCover cover_from_generators(const Representation& m, const std::vector<std::pair<std::size_t, Matrix>>& gens) {
  const AlgebraPtr& alg = m.algebra();
  const Field& f = m.field();
  std::vector<Representation> parts;
  std::vector<Matrix> blocks;
  ProjectiveCover out;
  for (const auto& [v, x] : gens) {
    VertexProjective p = vertex_projective(alg, v);
    parts.push_back(p.module);
    blocks.push_back(alg->orbit_map(m.gen_actions(), x) * p.basis_in_regular);
    out.vertices.push_back(v);
  }
  out.projective = direct_sum_module(alg, parts).with_label("P(" + m.label() + ")");
  out.cover = Morphism(out.projective, m, Matrix::hstack(f, m.dim(), blocks));
  return out;
}

}  // namespace

ProjectiveCover projective_cover(const Representation& m) {
  const Field& f = m.field();
  Submodule rad = radical_submodule(m);
  Matrix span = rad.inclusion.matrix();
  std::size_t span_dim = span.cols();
  std::vector<std::pair<std::size_t, Matrix>> gens;
  const auto& off = m.vertex_offsets();
  const auto& dims = m.dim_vector();
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (std::size_t c = 0; c < dims[v]; ++c) {
      if (span_dim == m.dim()) break;
      Matrix x = m.frame().column(off[v] + c);
      Matrix test = Matrix::hstack(f, m.dim(), {span, x});
      if (test.rank() == span_dim) continue;
      gens.push_back({v, x});
      span = generated_submodule(m, test).inclusion.matrix();
      span_dim = span.cols();
    }
  if (span_dim != m.dim()) throw InvariantError("projective cover generators do not generate");
  return cover_from_generators(m, gens);
}

ProjectiveCover frame_cover(const Representation& m) {
  std::vector<std::pair<std::size_t, Matrix>> gens;
  const auto& off = m.vertex_offsets();
  const auto& dims = m.dim_vector();
  for (std::size_t v = 0; v < dims.size(); ++v)
    for (std::size_t c = 0; c < dims[v]; ++c) gens.push_back({v, m.frame().column(off[v] + c)});
  return cover_from_generators(m, gens);
}

SyzygyData syzygy_data(const Representation& m, bool minimal) {
  ProjectiveCover c = minimal ? projective_cover(m) : frame_cover(m);
  Submodule k = kernel(c.cover);
  k.module = k.module.with_label("Omega(" + m.label() + ")");
  k.inclusion = Morphism(k.module, c.projective, k.inclusion.matrix());
  return {std::move(c), std::move(k)};
}

Representation syzygy(const Representation& m) { return syzygy_data(m).kernel.module; }

Representation cosyzygy(const Representation& m) {
  return rebase(dual(syzygy(dual(m))), m.algebra()).with_label("Omega^-1(" + m.label() + ")");
}

Representation syzygy_power(const Representation& m, int k) {
  Representation cur = m;
  for (int i = 0; i < k; ++i) cur = syzygy(cur);
  for (int i = 0; i > k; --i) cur = cosyzygy(cur);
  return cur;
}

ProjectivePresentation minimal_presentation(const Representation& m) {
  SyzygyData s0 = syzygy_data(m);
  ProjectiveCover c1 = projective_cover(s0.kernel.module);
  return {c1.cover.then(s0.kernel.inclusion), s0.cover.cover, true};
}

Resolution projective_resolution(const Representation& m, std::size_t steps, bool minimal) {
  Resolution r;
  r.module = m;
  r.minimal = minimal;
  SyzygyData s = syzygy_data(m, minimal);
  r.terms.push_back(s.cover.projective);
  r.augmentation = s.cover.cover;
  Submodule k = s.kernel;
  for (std::size_t i = 1; i <= steps && k.module.dim() > 0; ++i) {
    SyzygyData next = syzygy_data(k.module, minimal);
    r.terms.push_back(next.cover.projective);
    r.differentials.push_back(next.cover.cover.then(k.inclusion));
    k = next.kernel;
  }
  r.complete = k.module.dim() == 0;
  return r;
}

bool check_resolution(const Resolution& r) {
  if (!r.augmentation.is_surjective() || !r.augmentation.is_homomorphism()) return false;
  for (std::size_t i = 0; i < r.differentials.size(); ++i) {
    const Morphism& d = r.differentials[i];
    if (!d.is_homomorphism()) return false;
    const Morphism& prev = i == 0 ? r.augmentation : r.differentials[i - 1];
    if (!d.then(prev).is_zero()) return false;
    // image d = ker prev
    std::size_t ker_prev = prev.source().dim() - prev.matrix().rank();
    if (d.matrix().rank() != ker_prev) return false;
  }
  if (r.complete) {
    const Morphism& last = r.differentials.empty() ? r.augmentation : r.differentials.back();
    if (!last.is_injective()) return false;
  }
  return true;
}

std::string Dimension::to_string() const {
  if (value) return std::to_string(*value);
  return infinite ? "inf" : ">=" + std::to_string(cap);
}

namespace {

// pd over the graph Z -> indecomposable summands of Omega Z, with one node per
// isomorphism class. A node met again on the current path lies on a cycle.
class PdSearch {
 public:
  PdSearch(std::size_t cap, std::uint64_t seed) : cap_(cap), seed_(seed) {}

  Dimension of(const Representation& m) {
    Dimension d;
    d.cap = cap_;
    if (m.dim() == 0) {
      d.value = 0;
      return d;
    }
    Outcome o{0, false, false};
    for (const auto& z : indecomposable_summands(m, seed_)) o = merge(o, solve(node(z), 0));
    return to_dimension(o);
  }

 private:
  struct Outcome {
    std::size_t value;
    bool infinite, capped;
  };
  enum class State { fresh, open, done };
  struct Node {
    Representation m;
    State state = State::fresh;
    Outcome result{0, false, false};
  };

  static Outcome merge(Outcome a, Outcome b) {
    return {std::max(a.value, b.value), a.infinite || b.infinite, a.capped || b.capped};
  }

  Dimension to_dimension(Outcome o) const {
    Dimension d;
    d.cap = cap_;
    if (o.infinite) d.infinite = true;
    else if (!o.capped) d.value = o.value;
    return d;
  }

  std::size_t node(const Representation& z) {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].m.dim() == z.dim() && nodes_[i].m.dim_vector() == z.dim_vector() &&
          is_isomorphic(nodes_[i].m, z, seed_).holds())
        return i;
    nodes_.push_back({z});
    return nodes_.size() - 1;
  }

  Outcome solve(std::size_t i, std::size_t depth) {
    if (nodes_[i].state == State::open) return {0, true, false};
    if (nodes_[i].state == State::done && !nodes_[i].result.capped) return nodes_[i].result;
    if (depth > cap_) return {0, false, true};
    Representation z = nodes_[i].m;
    if (is_projective(z)) {
      nodes_[i].state = State::done;
      nodes_[i].result = {0, false, false};
      return nodes_[i].result;
    }
    nodes_[i].state = State::open;
    Outcome o{0, false, false};
    for (const auto& s : indecomposable_summands(syzygy(z), seed_)) {
      o = merge(o, solve(node(s), depth + 1));
      if (o.infinite) break;
    }
    o.value += 1;
    nodes_[i].state = State::done;
    nodes_[i].result = o;
    return o;
  }

  std::size_t cap_;
  std::uint64_t seed_;
  std::vector<Node> nodes_;
};

Dimension resolution_pd(const Representation& m, std::size_t cap) {
  Dimension d;
  d.cap = cap;
  if (m.dim() == 0) {
    d.value = 0;
    return d;
  }
  Resolution r = projective_resolution(m, cap);
  if (r.complete) d.value = r.terms.size() - 1;
  return d;
}

}  // namespace

Dimension proj_dim(const Representation& m, std::size_t cap, std::uint64_t seed) {
  // Over a self-injective algebra finite pd forces projectivity.
  if (m.dim() > 0 && !is_projective(m) && is_injective(Representation::regular(m.algebra()))) {
    Dimension d;
    d.cap = cap;
    d.infinite = true;
    return d;
  }
  try {
    return PdSearch(cap, seed).of(m);
  } catch (const FieldError&) {
    // Decomposition over Q needs split local summands; resolve directly instead.
    return resolution_pd(m, cap);
  }
}

Dimension global_dim(const AlgebraPtr& alg, std::size_t cap, std::uint64_t seed) {
  std::vector<Representation> simples;
  for (auto v : alg->class_representatives()) simples.push_back(simple_module(alg, v));
  return proj_dim(direct_sum_module(alg, simples), cap, seed);
}

std::vector<std::size_t> ext_dims(const Resolution& r, const Representation& n, std::size_t max_i) {
  if (!r.complete && r.terms.size() < max_i + 2) throw InvariantError("resolution too short for requested Ext");
  std::vector<HomSpace> c;
  for (std::size_t j = 0; j <= max_i + 1 && j < r.terms.size(); ++j) c.push_back(hom_space(r.terms[j], n));
  std::vector<std::size_t> rank(max_i + 1, 0);
  for (std::size_t j = 0; j <= max_i; ++j) {
    if (j + 1 >= c.size()) break;
    Matrix delta = pre_map(c[j], c[j + 1], r.differentials[j].matrix());
    rank[j] = delta.empty() ? 0 : delta.rank();
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= max_i; ++i) {
    std::size_t dim_c = i < c.size() ? c[i].dim() : 0;
    out.push_back(dim_c - rank[i] - (i ? rank[i - 1] : 0));
  }
  return out;
}

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i, bool minimal) {
  return ext_dims(projective_resolution(m, i + 1, minimal), n, i)[i];
}

Morphism ExtOne::representative(std::size_t k) const { return cocycles.combination(split.complement().column(k)); }

Morphism ExtOne::cocycle(const Matrix& class_coords) const {
  return cocycles.combination(split.complement() * class_coords);
}

Matrix ExtOne::class_of(const Morphism& phi) const {
  return split.quotient_coords(cocycles.coords_or_throw(phi.matrix()));
}

ExtOne ext_one(const Representation& y, const Representation& z) {
  SyzygyData s = syzygy_data(y);
  HomSpace cocycles = hom_space(s.kernel.module, z);
  HomSpace from_cover = hom_space(s.cover.projective, z);
  Matrix cob = pre_map(from_cover, cocycles, s.kernel.inclusion.matrix());
  SplitBasis split(z.field(), cocycles.dim(), cob.cols() ? cob : Matrix(z.field(), cocycles.dim(), 0));
  return {std::move(s), std::move(cocycles), std::move(split)};
}

ShortExact extension_from_cocycle(const SyzygyData& syz, const Morphism& phi) {
  const Representation& z = phi.target();
  const Representation& p0 = syz.cover.projective;
  const Field& f = z.field();
  DirectSum zp = direct_sum(z.algebra(), {z, p0});
  Matrix rel = Matrix::vstack(f, phi.source().dim(), {phi.matrix(), -syz.kernel.inclusion.matrix()});
  Quotient e = quotient(zp.module, rel, "E");
  Morphism fmap = zp.inclusions[0].then(e.projection);
  Matrix eps_ext(f, syz.cover.cover.target().dim(), zp.module.dim());
  eps_ext.set_block(0, z.dim(), syz.cover.cover.matrix());
  Morphism gmap(e.module, syz.cover.cover.target(), eps_ext * e.split.complement());
  return {fmap, gmap};
}

Matrix extension_class(const ExtOne& ext, const ShortExact& s) {
  auto h = lift_through(ext.syz.cover.cover, s.g);
  if (!h) throw InvariantError("cover does not lift through an epimorphism");
  Matrix hi = h->matrix() * ext.syz.kernel.inclusion.matrix();
  auto phi = s.f.matrix().solve(hi);
  if (!phi) throw InvariantError("extension sequence is not exact");
  return ext.class_of(Morphism(ext.syz.kernel.module, s.f.source(), *phi));
}

bool is_exact(const ShortExact& s) {
  return s.f.is_injective() && s.g.is_surjective() && s.f.then(s.g).is_zero() &&
         s.f.target().dim() == s.f.source().dim() + s.g.target().dim();
}

bool splits(const ShortExact& s) { return lift_through(Morphism::identity(s.g.target()), s.g).has_value(); }

bool is_projective(const Representation& m) { return syzygy_data(m).kernel.module.dim() == 0; }
bool is_injective(const Representation& m) { return is_projective(dual(m)); }

HomModule hom_to_regular(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  AlgebraPtr op = opposite(alg);
  Representation reg = Representation::regular(alg);
  HomSpace h = hom_space(m, reg);
  const Field& f = m.field();
  std::vector<Matrix> gens;
  for (const auto& g : op->generators()) {
    Matrix rho = alg->right_action(g.element);
    Matrix act(f, h.dim(), h.dim());
    for (std::size_t k = 0; k < h.dim(); ++k) act.set_block(0, k, h.coords_or_throw(rho * h.basis_matrix(k)));
    gens.push_back(std::move(act));
  }
  Representation mod(op, h.dim(), std::move(gens), "Hom(" + m.label() + ",A)");
  return {std::move(mod), std::move(h)};
}

Representation nakayama(const Representation& m) {
  return rebase(dual(hom_to_regular(m).module), m.algebra()).with_label("nu(" + m.label() + ")");
}

Representation transpose(const Representation& m) {
  ProjectivePresentation p = minimal_presentation(m);
  HomModule h0 = hom_to_regular(p.d1.target());
  HomModule h1 = hom_to_regular(p.d1.source());
  Morphism dstar(h0.module, h1.module, pre_map(h0.space, h1.space, p.d1.matrix()));
  return cokernel(dstar).module.with_label("Tr(" + m.label() + ")");
}

Representation tau(const Representation& m) {
  return rebase(dual(transpose(m)), m.algebra()).with_label("tau(" + m.label() + ")");
}

Representation tau_inverse(const Representation& m) {
  return rebase(transpose(dual(m)), m.algebra()).with_label("tau^-1(" + m.label() + ")");
}

}  // namespace tiltkit
