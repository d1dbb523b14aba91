#include "tiltkit/representation.hpp"

#include "tiltkit/error.hpp"

namespace tiltkit {

Representation::Representation(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> gen_actions, std::string label) {
  if (!alg) throw InvariantError("representation without algebra");
  const auto& gens = alg->generators();
  if (gen_actions.size() != gens.size()) throw InputError("wrong number of generator actions");
  for (const auto& m : gen_actions)
    if (m.rows() != dim || m.cols() != dim || !(m.field() == alg->field()))
      throw InputError("generator action has wrong shape or field");
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->dim = dim;
  d->gens = std::move(gen_actions);
  d->label = std::move(label);
  const Field& f = d->alg->field();
  const std::size_t k = d->alg->vertex_count();
  Matrix sum(f, dim, dim);
  std::vector<Matrix> cols;
  std::size_t offset = 0;
  for (std::size_t v = 0; v < k; ++v) {
    const Matrix& e = d->gens[v];
    if (!(e * e == e)) throw InputError("idempotent acts by a non-idempotent matrix");
    for (std::size_t w = 0; w < v; ++w)
      if (!(e * d->gens[w]).is_zero()) throw InputError("vertex idempotents do not act orthogonally");
    sum = sum + e;
    Matrix img = dim ? e.column_space() : Matrix(f, 0, 0);
    d->voffsets.push_back(offset);
    d->vdims.push_back(img.cols());
    offset += img.cols();
    cols.push_back(std::move(img));
  }
  if (!sum.is_identity()) throw InputError("vertex idempotents do not sum to the identity");
  d->frame = Matrix::hstack(f, dim, cols);
  auto inv = d->frame.inverse();
  if (!inv) throw InvariantError("vertex frame is singular");
  d->coframe = std::move(*inv);
  d_ = std::move(d);
}

Representation Representation::with_label(std::string label) const {
  auto d = std::make_shared<Data>(*d_);
  d->label = std::move(label);
  Representation r;
  r.d_ = std::move(d);
  return r;
}

Representation Representation::zero(const AlgebraPtr& alg) {
  std::vector<Matrix> gens(alg->generators().size(), Matrix(alg->field(), 0, 0));
  return Representation(alg, 0, std::move(gens), "0");
}

Representation Representation::regular(const AlgebraPtr& alg) {
  std::vector<Matrix> gens;
  for (const auto& g : alg->generators()) gens.push_back(alg->left_action(g.element));
  return Representation(alg, alg->dim(), std::move(gens), "A");
}

Representation Representation::from_quiver(const AlgebraPtr& alg, const std::map<std::string, std::size_t>& dims,
                                           const std::map<std::string, Matrix>& arrows, std::string label) {
  const auto& pres = alg->presentation();
  if (!pres) throw InputError("algebra has no quiver presentation");
  const Quiver& q = pres->quiver;
  for (const auto& [v, n] : dims) q.vertex_index(v);
  for (const auto& [a, m] : arrows) q.arrow_index(a);
  const Field& f = alg->field();
  std::vector<std::size_t> off, n;
  std::size_t total = 0;
  for (const auto& v : q.vertices) {
    auto it = dims.find(v);
    off.push_back(total);
    n.push_back(it == dims.end() ? 0 : it->second);
    total += n.back();
  }
  std::vector<Matrix> gens;
  for (const auto& g : alg->generators()) {
    Matrix m(f, total, total);
    if (g.kind == Generator::Kind::idempotent) {
      m.set_block(off[g.source], off[g.source], Matrix::identity(f, n[g.source]));
    } else {
      auto it = arrows.find(g.label);
      if (it != arrows.end()) {
        if (it->second.rows() != n[g.target] || it->second.cols() != n[g.source])
          throw InputError("arrow '" + g.label + "' matrix has shape " + std::to_string(it->second.rows()) + "x" +
                           std::to_string(it->second.cols()) + ", expected " + std::to_string(n[g.target]) + "x" +
                           std::to_string(n[g.source]));
        m.set_block(off[g.target], off[g.source], it->second);
      }
    }
    gens.push_back(std::move(m));
  }
  Representation r(alg, total, std::move(gens), std::move(label));
  if (!r.validate()) throw InputError("module matrices violate the relations");
  return r;
}

Representation Representation::from_basis_actions(const AlgebraPtr& alg, const std::vector<Matrix>& actions,
                                                  std::string label) {
  if (actions.size() != alg->dim()) throw InputError("one action matrix per basis element required");
  const std::size_t n = actions.empty() ? 0 : actions[0].rows();
  std::vector<Matrix> gens;
  for (const auto& g : alg->generators()) {
    Matrix m(alg->field(), n, n);
    for (std::size_t i = 0; i < alg->dim(); ++i)
      if (!g.element.entry_is_zero(i, 0)) m.add_scaled(actions[i], g.element.at(i, 0));
    gens.push_back(std::move(m));
  }
  Representation r(alg, n, std::move(gens), std::move(label));
  for (std::size_t i = 0; i < alg->dim(); ++i)
    if (!(r.basis_action(i) == actions[i])) throw InputError("action matrices are not determined by the generators");
  if (!r.validate()) throw InputError("action matrices violate the structure constants");
  return r;
}

Matrix Representation::action(const Matrix& element) const {
  return d_->alg->act_on(d_->gens, element, Matrix::identity(field(), dim()));
}

Matrix Representation::act(const Matrix& element, const Matrix& vecs) const {
  return d_->alg->act_on(d_->gens, element, vecs);
}

bool Representation::validate() const {
  const AlgebraTable& a = *d_->alg;
  for (std::size_t g = 0; g < a.generators().size(); ++g)
    if (!(action(a.generators()[g].element) == d_->gens[g])) return false;
  std::vector<Matrix> b;
  for (std::size_t i = 0; i < a.dim(); ++i) b.push_back(basis_action(i));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Matrix expect(field(), dim(), dim());
      const Matrix& c = a.left_mult(i);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!c.entry_is_zero(k, j)) expect.add_scaled(b[k], c.at(k, j));
      if (!(b[i] * b[j] == expect)) return false;
    }
  return action(a.one()).is_identity();
}

Morphism::Morphism(Representation src, Representation dst, Matrix m)
    : src_(std::move(src)), dst_(std::move(dst)), m_(std::move(m)) {
  if (m_.rows() != dst_.dim() || m_.cols() != src_.dim()) throw InvariantError("morphism matrix has wrong shape");
}

Morphism Morphism::identity(const Representation& m) { return Morphism(m, m, Matrix::identity(m.field(), m.dim())); }

Morphism Morphism::zero(const Representation& src, const Representation& dst) {
  return Morphism(src, dst, Matrix(src.field(), dst.dim(), src.dim()));
}

Morphism Morphism::then(const Morphism& g) const {
  if (g.src_.dim() != dst_.dim()) throw InvariantError("composition of non-composable morphisms");
  return Morphism(src_, g.dst_, g.m_ * m_);
}

Morphism Morphism::operator+(const Morphism& o) const { return Morphism(src_, dst_, m_ + o.m_); }
Morphism Morphism::operator-(const Morphism& o) const { return Morphism(src_, dst_, m_ - o.m_); }
Morphism Morphism::scaled(const Scalar& s) const { return Morphism(src_, dst_, m_.scaled(s)); }

bool Morphism::is_homomorphism() const {
  if (!same_algebra(src_.algebra(), dst_.algebra())) return false;
  for (std::size_t g = 0; g < src_.gen_actions().size(); ++g)
    if (!(m_ * src_.gen_action(g) == dst_.gen_action(g) * m_)) return false;
  return true;
}

Morphism compose(const Morphism& f, const Morphism& g) { return f.then(g); }

HomSpace::HomSpace(Representation src, Representation dst, std::vector<Matrix> basis)
    : src_(std::move(src)), dst_(std::move(dst)), basis_(std::move(basis)) {
  const std::size_t n = src_.dim() * dst_.dim();
  std::vector<Matrix> cols;
  for (const auto& b : basis_) cols.push_back(b.vec());
  Matrix span = Matrix::hstack(src_.field(), n, cols);
  vecs_ = ColumnBasis(src_.field(), n, span);
  if (vecs_.dim() != basis_.size()) throw InvariantError("HomSpace basis is dependent");
}

Morphism HomSpace::combination(const Matrix& coeffs) const {
  Matrix m(src_.field(), dst_.dim(), src_.dim());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    if (!coeffs.entry_is_zero(k, 0)) m.add_scaled(basis_[k], coeffs.at(k, 0));
  return Morphism(src_, dst_, std::move(m));
}

std::optional<Matrix> HomSpace::coords(const Matrix& map) const {
  auto c = vecs_.coords(map.vec());
  if (!c) return std::nullopt;
  // vecs_ keeps the columns in order since they are independent.
  return c;
}

Matrix HomSpace::coords_or_throw(const Matrix& map) const {
  auto c = coords(map);
  if (!c) throw InvariantError("map is not in the Hom space");
  return *c;
}

HomSpace hom_space(const Representation& m, const Representation& n) {
  if (!same_algebra(m.algebra(), n.algebra())) throw InvariantError("hom_space: modules over different algebras");
  const Field& f = m.field();
  const AlgebraTable& a = *m.algebra();
  const std::size_t k = a.vertex_count();
  const auto& md = m.dim_vector();
  const auto& nd = n.dim_vector();
  const auto& mo = m.vertex_offsets();
  const auto& no = n.vertex_offsets();
  std::vector<std::size_t> off(k);
  std::size_t unknowns = 0;
  for (std::size_t v = 0; v < k; ++v) {
    off[v] = unknowns;
    unknowns += nd[v] * md[v];
  }
  std::vector<Matrix> blocks;
  std::size_t rows = 0;
  for (std::size_t g = k; g < a.generators().size(); ++g) {
    const Generator& gen = a.generators()[g];
    const std::size_t s = gen.source, t = gen.target;
    if (nd[t] * md[s] == 0) continue;
    Matrix mp = (m.coframe() * m.gen_action(g) * m.frame()).block(mo[t], mo[s], md[t], md[s]);
    Matrix np = (n.coframe() * n.gen_action(g) * n.frame()).block(no[t], no[s], nd[t], nd[s]);
    if (mp.is_zero() && np.is_zero()) continue;
    // N' F_s - F_t M' = 0
    Matrix eq(f, nd[t] * md[s], unknowns);
    if (nd[s] * md[s] != 0) eq.set_block(0, off[s], Matrix::kron(Matrix::identity(f, md[s]), np));
    if (nd[t] * md[t] != 0) {
      Matrix rhs = Matrix::kron(mp.transpose(), Matrix::identity(f, nd[t]));
      Matrix cur = eq.block(0, off[t], eq.rows(), rhs.cols());
      eq.set_block(0, off[t], cur - rhs);
    }
    rows += eq.rows();
    blocks.push_back(std::move(eq));
  }
  Matrix system = Matrix::vstack(f, unknowns, blocks);
  Matrix ker = system.rows() ? system.kernel() : Matrix::identity(f, unknowns);
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    Matrix fb(f, n.dim(), m.dim());
    for (std::size_t v = 0; v < k; ++v) {
      if (nd[v] * md[v] == 0) continue;
      Matrix piece = Matrix::unvec(ker.block(off[v], c, nd[v] * md[v], 1), nd[v], md[v]);
      fb.set_block(no[v], mo[v], piece);
    }
    basis.push_back(n.frame() * fb * m.coframe());
  }
  return HomSpace(m, n, std::move(basis));
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).dim(); }

Matrix post_map(const HomSpace& from, const HomSpace& to, const Matrix& t) {
  Matrix out(t.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) out.set_block(0, k, to.coords_or_throw(t * from.basis_matrix(k)));
  return out;
}

Matrix pre_map(const HomSpace& from, const HomSpace& to, const Matrix& s) {
  Matrix out(s.field(), to.dim(), from.dim());
  for (std::size_t k = 0; k < from.dim(); ++k) out.set_block(0, k, to.coords_or_throw(from.basis_matrix(k) * s));
  return out;
}

DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  const Field& f = alg->field();
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), alg)) throw InvariantError("direct_sum: mixed algebras");
    total += p.dim();
  }
  std::vector<Matrix> gens;
  for (std::size_t g = 0; g < alg->generators().size(); ++g) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.gen_action(g));
    gens.push_back(Matrix::block_diag(f, blocks));
  }
  std::string label;
  for (const auto& p : parts) label += (label.empty() ? "" : "+") + p.label();
  DirectSum out{Representation(alg, total, std::move(gens), label), {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix inc(f, total, p.dim()), proj(f, p.dim(), total);
    inc.set_block(off, 0, Matrix::identity(f, p.dim()));
    proj.set_block(0, off, Matrix::identity(f, p.dim()));
    out.inclusions.emplace_back(p, out.module, std::move(inc));
    out.projections.emplace_back(out.module, p, std::move(proj));
    off += p.dim();
  }
  return out;
}

Representation direct_sum_module(const AlgebraPtr& alg, const std::vector<Representation>& parts) {
  return direct_sum(alg, parts).module;
}

Submodule submodule(const Representation& m, const Matrix& basis, std::string label) {
  const Field& f = m.field();
  ColumnBasis cb(f, m.dim(), basis.cols() ? basis : Matrix(f, m.dim(), 0));
  std::vector<Matrix> gens;
  for (const auto& g : m.gen_actions()) {
    auto c = cb.coords(g * cb.basis());
    if (!c) throw InvariantError("submodule: subspace is not invariant");
    gens.push_back(std::move(*c));
  }
  Representation sub(m.algebra(), cb.dim(), std::move(gens), std::move(label));
  return {sub, Morphism(sub, m, cb.basis())};
}

Submodule generated_submodule(const Representation& m, const Matrix& vecs, std::string label) {
  const Field& f = m.field();
  Matrix span = vecs.cols() ? vecs.column_space() : Matrix(f, m.dim(), 0);
  for (;;) {
    std::vector<Matrix> parts{span};
    for (const auto& g : m.gen_actions())
      if (span.cols()) parts.push_back(g * span);
    Matrix next = Matrix::hstack(f, m.dim(), parts);
    next = next.cols() ? next.column_space() : next;
    if (next.cols() == span.cols()) break;
    span = std::move(next);
  }
  return submodule(m, span, std::move(label));
}

Quotient quotient(const Representation& m, const Matrix& sub_span, std::string label) {
  const Field& f = m.field();
  SplitBasis split(f, m.dim(), sub_span.cols() ? sub_span : Matrix(f, m.dim(), 0));
  const std::size_t q = split.quotient_dim();
  std::vector<Matrix> gens;
  for (const auto& g : m.gen_actions()) {
    if (split.sub_dim()) {
      Matrix img = split.split_coords(g * split.sub()).block(split.sub_dim(), 0, q, split.sub_dim());
      if (!img.is_zero()) throw InvariantError("quotient: subspace is not invariant");
    }
    gens.push_back(split.quotient_coords(g * split.complement()));
  }
  Representation quo(m.algebra(), q, std::move(gens), std::move(label));
  Matrix proj = split.inverse().block(split.sub_dim(), 0, q, m.dim());
  return {quo, Morphism(m, quo, std::move(proj)), std::move(split)};
}

Submodule kernel(const Morphism& f) { return submodule(f.source(), f.matrix().kernel()); }

Submodule image(const Morphism& f) {
  const Matrix& m = f.matrix();
  return submodule(f.target(), m.cols() ? m.column_space() : m);
}

Quotient cokernel(const Morphism& f) { return quotient(f.target(), f.matrix()); }

std::optional<Morphism> lift_through(const Morphism& h, const Morphism& epi) {
  HomSpace hs = hom_space(h.source(), epi.source());
  const std::size_t n = h.target().dim() * h.source().dim();
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < hs.dim(); ++k) cols.push_back((epi.matrix() * hs.basis_matrix(k)).vec());
  Matrix sys = Matrix::hstack(h.source().field(), n, cols);
  auto c = sys.solve(h.matrix().vec());
  if (!c) return std::nullopt;
  return hs.combination(*c);
}

Submodule radical_submodule(const Representation& m) {
  const Field& f = m.field();
  const auto& gens = m.algebra()->generators();
  std::vector<Matrix> parts;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].kind == Generator::Kind::arrow && m.dim()) parts.push_back(m.gen_action(g));
  Matrix span = Matrix::hstack(f, m.dim(), parts);
  return generated_submodule(m, span, "rad " + m.label());
}

Quotient top(const Representation& m) {
  return quotient(m, radical_submodule(m).inclusion.matrix(), "top " + m.label());
}

Submodule socle(const Representation& m) {
  const Field& f = m.field();
  const auto& gens = m.algebra()->generators();
  std::vector<Matrix> arrows;
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (gens[g].kind == Generator::Kind::arrow) arrows.push_back(m.gen_action(g));
  Matrix space = Matrix::identity(f, m.dim());
  if (!arrows.empty()) space = Matrix::vstack(f, m.dim(), arrows).kernel();
  // Largest invariant subspace inside the common kernel.
  for (;;) {
    if (space.cols() == 0) break;
    SplitBasis sp(f, m.dim(), space);
    std::vector<Matrix> conds;
    for (const auto& g : m.gen_actions()) conds.push_back(sp.quotient_coords(g * space));
    Matrix c = Matrix::vstack(f, space.cols(), conds);
    Matrix ker = c.rows() ? c.kernel() : Matrix::identity(f, space.cols());
    if (ker.cols() == space.cols()) break;
    space = space * ker;
  }
  return submodule(m, space, "soc " + m.label());
}

Representation dual(const Representation& m) {
  AlgebraPtr op = opposite(m.algebra());
  std::vector<Matrix> gens;
  for (const auto& g : m.gen_actions()) gens.push_back(g.transpose());
  return Representation(op, m.dim(), std::move(gens), "D" + m.label());
}

Morphism dual(const Morphism& f) {
  return Morphism(dual(f.target()), dual(f.source()), f.matrix().transpose());
}

Representation rebase(const Representation& m, const AlgebraPtr& alg) {
  if (m.algebra() == alg) return m;
  if (!same_algebra(m.algebra(), alg)) throw InvariantError("rebase: algebras differ");
  return Representation(alg, m.dim(), m.gen_actions(), m.label());
}

VertexProjective vertex_projective(const AlgebraPtr& alg, std::size_t v) {
  Matrix basis = alg->right_action(alg->idempotent(v)).column_space();
  Representation reg = Representation::regular(alg);
  auto sub = submodule(reg, basis, "P" + std::to_string(v));
  return {sub.module, sub.inclusion.matrix()};
}

Representation simple_module(const AlgebraPtr& alg, std::size_t v) {
  return top(vertex_projective(alg, v).module).module.with_label("S" + std::to_string(v));
}

Representation injective_module(const AlgebraPtr& alg, std::size_t v) {
  Representation p = vertex_projective(opposite(alg), v).module;
  return rebase(dual(p), alg).with_label("I" + std::to_string(v));
}

}  // namespace tiltkit
