#include "tiltkit/approx.hpp"

#include <sstream>

#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/error.hpp"

namespace tiltkit {

namespace {

Matrix power(const Matrix& a, std::size_t k) {
  Matrix r = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool nilpotent(const Matrix& u) { return power(u, u.rows()).is_zero(); }

// Coordinates (as columns) of the u in End(E) with a linear condition lin(u) = 0.
template <class Lin>
Matrix ideal_coords(const HomSpace& end, Lin lin) {
  const Field& f = end.source().field();
  std::vector<Matrix> cols;
  for (std::size_t k = 0; k < end.dim(); ++k) cols.push_back(lin(end.basis_matrix(k)).vec());
  std::size_t rows = cols.empty() ? 0 : cols.front().rows();
  return Matrix::hstack(f, rows, cols).kernel();
}

// A non-nilpotent element of the span, or nullopt if the span lies in rad End(E).
std::optional<Matrix> non_nilpotent(const EndomorphismRing& er, const Matrix& coords, std::uint64_t seed) {
  bool inside = true;
  for (std::size_t k = 0; k < coords.cols() && inside; ++k) inside = er.radical.contains(coords.column(k));
  if (inside) return std::nullopt;
  for (std::size_t k = 0; k < coords.cols(); ++k) {
    Matrix u = er.space.combination(coords.column(k)).matrix();
    if (!nilpotent(u)) return u;
  }
  auto rng = make_rng(seed);
  const Field& f = er.space.source().field();
  for (int trial = 0; trial < 256; ++trial) {
    Matrix c = coords * Matrix::random(f, coords.cols(), 1, rng);
    Matrix u = er.space.combination(c).matrix();
    if (!nilpotent(u)) return u;
  }
  throw InvariantError("one-sided ideal outside the radical has no non-nilpotent sample");
}

Matrix right_kernel_ideal(const HomSpace& end, const Morphism& g) {
  return ideal_coords(end, [&](const Matrix& u) { return g.matrix() * u; });
}

Matrix left_kernel_ideal(const HomSpace& end, const Morphism& f) {
  return ideal_coords(end, [&](const Matrix& u) { return u * f.matrix(); });
}

std::size_t rank_of(const Matrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : m.rank(); }

// Exactness of H_0 -> H_1 -> ... with injectivity at H_0, given the map matrices.
std::optional<std::string> exactness_failure(const std::vector<std::size_t>& dims, const std::vector<Matrix>& maps) {
  if (rank_of(maps.front()) != dims.front()) return "not injective at position 0";
  for (std::size_t j = 1; j < maps.size(); ++j) {
    if (maps[j].cols() && maps[j - 1].cols() && maps[j].rows() && !(maps[j] * maps[j - 1]).is_zero())
      return "composite nonzero at position " + std::to_string(j);
    if (dims[j] - rank_of(maps[j]) != rank_of(maps[j - 1])) return "homology at position " + std::to_string(j);
  }
  return std::nullopt;
}

}  // namespace

Representation SequenceData::target_module() const {
  if (terms.empty()) throw InputError("empty sequence");
  if (target.empty()) return Representation::zero(terms.front().algebra());
  if (target.size() == 1) return target.front();
  return direct_sum_module(terms.front().algebra(), target).with_label("M");
}

void SequenceData::check_chain() const {
  if (terms.size() < 3 || maps.size() + 1 != terms.size()) throw InputError("malformed chain: need X, M_n..M_1, Y and n+1 maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i].source().dim() != terms[i].dim() || maps[i].target().dim() != terms[i + 1].dim())
      throw InputError("malformed chain: map " + std::to_string(i) + " does not match its terms");
    if (!maps[i].is_homomorphism()) throw InputError("malformed chain: map " + std::to_string(i) + " is not a homomorphism");
  }
  for (const auto& t : terms)
    if (t.algebra() != terms.front().algebra()) throw InputError("malformed chain: mixed algebras");
}

bool VerificationReport::ok() const {
  for (const auto& c : clauses)
    if (!c.ok) return false;
  return true;
}

const Clause* VerificationReport::find(const std::string& name) const {
  for (const auto& c : clauses)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<std::string> VerificationReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : clauses)
    if (!c.ok) out.push_back(c.name);
  return out;
}

void VerificationReport::add(std::string name, bool ok, std::string detail, std::optional<Morphism> witness) {
  clauses.push_back({std::move(name), ok, std::move(detail), std::move(witness)});
}

Morphism right_approximation(const Representation& y, const Representation& m) {
  HomSpace h = hom_space(m, y);
  std::vector<Representation> copies(h.dim(), m);
  Representation src = copies.empty() ? Representation::zero(y.algebra()) : direct_sum_module(y.algebra(), copies);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < h.dim(); ++k) blocks.push_back(h.basis_matrix(k));
  return Morphism(src, y, Matrix::hstack(y.field(), y.dim(), blocks));
}

Morphism left_approximation(const Representation& x, const Representation& m) {
  HomSpace h = hom_space(x, m);
  std::vector<Representation> copies(h.dim(), m);
  Representation dst = copies.empty() ? Representation::zero(x.algebra()) : direct_sum_module(x.algebra(), copies);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < h.dim(); ++k) blocks.push_back(h.basis_matrix(k));
  return Morphism(x, dst, Matrix::vstack(x.field(), x.dim(), blocks));
}

namespace {

// Some h in Hom(m, y) not of the form g.s, or nullopt when g is a right approximation.
std::optional<Morphism> right_obstruction(const Morphism& g, const Representation& m) {
  HomSpace to_y = hom_space(m, g.target());
  if (to_y.dim() == 0) return std::nullopt;
  HomSpace to_e = hom_space(m, g.source());
  Matrix img = to_e.dim() ? post_map(to_e, to_y, g.matrix()) : Matrix(g.field(), to_y.dim(), 0);
  SplitBasis sb(g.field(), to_y.dim(), img);
  if (sb.quotient_dim() == 0) return std::nullopt;
  return to_y.combination(sb.complement().column(0));
}

std::optional<Morphism> left_obstruction(const Morphism& f, const Representation& m) {
  HomSpace from_x = hom_space(f.source(), m);
  if (from_x.dim() == 0) return std::nullopt;
  HomSpace from_e = hom_space(f.target(), m);
  Matrix img = from_e.dim() ? pre_map(from_e, from_x, f.matrix()) : Matrix(f.field(), from_x.dim(), 0);
  SplitBasis sb(f.field(), from_x.dim(), img);
  if (sb.quotient_dim() == 0) return std::nullopt;
  return from_x.combination(sb.complement().column(0));
}

}  // namespace

bool is_right_approximation(const Morphism& g, const Representation& m) { return !right_obstruction(g, m); }
bool is_left_approximation(const Morphism& f, const Representation& m) { return !left_obstruction(f, m); }

bool is_right_minimal(const Morphism& g) {
  if (g.source().dim() == 0) return true;
  EndomorphismRing er = endomorphism_ring(g.source());
  return !non_nilpotent(er, right_kernel_ideal(er.space, g), 0);
}

bool is_left_minimal(const Morphism& f) {
  if (f.target().dim() == 0) return true;
  EndomorphismRing er = endomorphism_ring(f.target());
  return !non_nilpotent(er, left_kernel_ideal(er.space, f), 0);
}

Morphism minimize_right(const Morphism& g, std::uint64_t seed) {
  Morphism cur = g;
  while (cur.source().dim() > 0) {
    EndomorphismRing er = endomorphism_ring(cur.source());
    auto u = non_nilpotent(er, right_kernel_ideal(er.space, cur), seed);
    if (!u) break;
    // g kills im u^N, so the Fitting complement ker u^N still approximates.
    Matrix un = power(*u, u->rows());
    Submodule k = kernel(Morphism(cur.source(), cur.source(), un));
    cur = k.inclusion.then(cur);
  }
  return cur;
}

Morphism minimize_left(const Morphism& f, std::uint64_t seed) {
  Morphism cur = f;
  while (cur.target().dim() > 0) {
    EndomorphismRing er = endomorphism_ring(cur.target());
    auto u = non_nilpotent(er, left_kernel_ideal(er.space, cur), seed);
    if (!u) break;
    Matrix un = power(*u, u->rows());
    Submodule k = kernel(Morphism(cur.target(), cur.target(), un));
    auto m = k.inclusion.matrix().solve(cur.matrix());
    if (!m) throw InvariantError("left map does not land in the Fitting complement");
    cur = Morphism(cur.source(), k.module, *m);
  }
  return cur;
}

VerificationReport verify_almost_dsplit(const SequenceData& s) {
  s.check_chain();
  if (s.n() != 1) throw InputError("almost D-split verification needs a sequence X -> M' -> Y");
  VerificationReport r;
  Representation m = s.target_module();
  const Morphism& f = s.f();
  const Morphism& g = s.g();
  r.add("middle-in-add", in_add(s.terms[1], m), "M' in add(M)");
  auto lo = left_obstruction(f, m);
  r.add("left-approximation", !lo, lo ? "a map X -> M does not factor through f" : "", lo);
  auto ro = right_obstruction(g, m);
  r.add("right-approximation", !ro, ro ? "a map M -> Y does not factor through g" : "", ro);
  bool comp = (g.matrix() * f.matrix()).is_zero();
  std::size_t rf = rank_of(f.matrix()), rg = rank_of(g.matrix());
  bool ker = comp && rf == f.source().dim() && rf == s.terms[1].dim() - rg;
  r.add("kernel", ker, ker ? "" : "f is not a kernel of g");
  bool cok = comp && rg == g.target().dim() && rg == s.terms[1].dim() - rf;
  r.add("cokernel", cok, cok ? "" : "g is not a cokernel of f");
  return r;
}

VerificationReport verify_lemma_conditions(const SequenceData& s) {
  s.check_chain();
  VerificationReport r;
  const AlgebraPtr& alg = s.x().algebra();
  Representation m = s.target_module();
  bool all_in = true;
  for (std::size_t i = 1; i + 1 < s.terms.size(); ++i) all_in = all_in && in_add(s.terms[i], m);
  r.add("terms-in-add", all_in, "M_i in add(M)");
  auto lo = left_obstruction(s.f(), m);
  r.add("left-approximation", !lo, lo ? "a map X -> M does not factor through f" : "", lo);
  auto ro = right_obstruction(s.g(), m);
  r.add("right-approximation", !ro, ro ? "a map M -> Y does not factor through g" : "", ro);

  std::vector<Representation> vparts = s.target, wparts = s.target;
  vparts.push_back(s.x());
  wparts.push_back(s.y());
  Representation v = direct_sum_module(alg, vparts), w = direct_sum_module(alg, wparts);
  std::size_t len = s.terms.size();

  std::vector<HomSpace> hv;
  for (const auto& t : s.terms) hv.push_back(hom_space(v, t));
  std::vector<std::size_t> dv;
  std::vector<Matrix> mv;
  for (std::size_t j = 0; j + 1 < len; ++j) {
    dv.push_back(hv[j].dim());
    mv.push_back(hv[j].dim() && hv[j + 1].dim() ? post_map(hv[j], hv[j + 1], s.maps[j].matrix())
                                                : Matrix(v.field(), hv[j + 1].dim(), hv[j].dim()));
  }
  auto ev = exactness_failure(dv, mv);
  r.add("hom-V-exact", !ev, ev ? *ev : "");

  std::vector<HomSpace> hw;
  for (const auto& t : s.terms) hw.push_back(hom_space(t, w));
  std::vector<std::size_t> dw;
  std::vector<Matrix> mw;
  for (std::size_t j = len - 1; j >= 1; --j) {
    dw.push_back(hw[j].dim());
    mw.push_back(hw[j].dim() && hw[j - 1].dim() ? pre_map(hw[j], hw[j - 1], s.maps[j - 1].matrix())
                                                : Matrix(w.field(), hw[j - 1].dim(), hw[j].dim()));
  }
  auto ew = exactness_failure(dw, mw);
  r.add("hom-W-exact", !ew, ew ? *ew : "");
  return r;
}

ShortExact as_short_exact(const SequenceData& s) {
  if (s.n() != 1) throw InputError("not a short sequence");
  return {s.f(), s.g()};
}

SequenceData ar_sequence(const Representation& y, std::uint64_t seed) {
  if (is_projective(y)) throw InputError("AR sequence requested for a projective module");
  if (decompose(y, seed).summands.size() != 1) throw InputError("AR sequence requested for a decomposable module");
  Representation z = tau(y);
  ExtOne ext = ext_one(y, z);
  if (ext.dim() == 0) throw InvariantError("Ext^1(Y, tau Y) vanishes");
  const Field& f = y.field();
  const Morphism& eps = ext.syz.cover.cover;
  const Morphism& iota = ext.syz.kernel.inclusion;

  // Precomposition by each radical endomorphism r of Y, lifted to Omega Y.
  EndomorphismRing er = endomorphism_ring(y);
  std::vector<Matrix> restricted;
  for (std::size_t k = 0; k < er.radical.dim(); ++k) {
    Morphism r = er.space.combination(er.radical.basis().column(k));
    auto lift = lift_through(eps.then(r), eps);
    if (!lift) throw InvariantError("radical endomorphism does not lift to the cover");
    auto rr = iota.matrix().solve(lift->matrix() * iota.matrix());
    if (!rr) throw InvariantError("lift does not preserve the syzygy");
    restricted.push_back(*rr);
  }
  Matrix socle_basis = Matrix::identity(f, ext.dim());
  if (!restricted.empty()) {
    std::vector<Matrix> rows;
    for (const auto& rr : restricted) {
      std::vector<Matrix> cols;
      for (std::size_t c = 0; c < ext.dim(); ++c)
        cols.push_back(ext.class_of(Morphism(ext.syz.kernel.module, z, ext.representative(c).matrix() * rr)));
      rows.push_back(Matrix::hstack(f, ext.dim(), cols));
    }
    socle_basis = Matrix::vstack(f, ext.dim(), rows).kernel();
  }
  if (socle_basis.cols() == 0) throw InvariantError("socle of Ext^1(Y, tau Y) is zero");
  ShortExact s = extension_from_cocycle(ext.syz, ext.cocycle(socle_basis.column(0)));
  if (!is_exact(s) || splits(s)) throw InvariantError("socle extension is not a non-split exact sequence");
  if (decompose(z, seed).summands.size() != 1) throw InvariantError("tau Y is not indecomposable");

  SequenceData out;
  out.kind = SequenceKind::almost_dsplit;
  Representation mid = s.f.target().with_label("E(" + y.label() + ")");
  out.terms = {z, mid, y};
  out.maps = {Morphism(z, mid, s.f.matrix()), Morphism(mid, y, s.g.matrix())};
  out.target = {mid};
  return out;
}

SpliceResult splice_chain(const std::vector<SequenceData>& list, std::uint64_t seed) {
  if (list.empty()) throw InputError("empty splice list");
  for (const auto& s : list)
    if (s.n() != 1) throw InputError("splice needs short sequences");
  std::size_t n = list.size();
  SpliceResult out;
  SequenceData& c = out.chain;
  c.kind = n == 1 ? list.front().kind : SequenceKind::chain;

  // Connecting isomorphisms Y(list[i]) -> X(list[i-1]).
  std::vector<Morphism> theta(n);
  for (std::size_t i = 1; i < n; ++i) {
    IsoResult iso = is_isomorphic(list[i].y(), list[i - 1].x(), seed);
    if (!iso.holds()) throw InputError("splice end mismatch at position " + std::to_string(i));
    theta[i] = *iso.witness;
  }
  c.terms.push_back(list[n - 1].x());
  for (std::size_t i = n; i-- > 0;) c.terms.push_back(list[i].terms[1]);
  c.terms.push_back(list[0].y());
  c.maps.push_back(list[n - 1].f());
  for (std::size_t i = n - 1; i >= 1; --i) c.maps.push_back(list[i].g().then(theta[i]).then(list[i - 1].f()));
  c.maps.push_back(list[0].g());

  if (n == 1) {
    c.target = list.front().target;
  } else {
    std::vector<Representation> middles;
    for (const auto& s : list) middles.push_back(s.terms[1]);
    c.target = distinct_indecomposables(middles, seed);
  }

  Representation m = c.target_module();
  std::vector<Representation> ends;
  ends.push_back(list[0].y());
  for (const auto& s : list) ends.push_back(s.x());
  bool outside = true;
  for (const auto& e : ends) outside = outside && !in_add(e, m);
  out.report.add("ends-outside-add", outside, "X_i not in add(M)");
  bool distinct = true;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i + 1; j < ends.size(); ++j) distinct = distinct && !is_isomorphic(ends[i], ends[j], seed).holds();
  out.report.add("ends-pairwise-nonisomorphic", distinct);
  VerificationReport lemma = verify_lemma_conditions(c);
  for (auto& cl : lemma.clauses) out.report.clauses.push_back(std::move(cl));
  return out;
}

std::optional<SequenceIso> sequence_isomorphism(const SequenceData& a, const SequenceData& b, std::uint64_t seed) {
  if (a.n() != 1 || b.n() != 1) throw InputError("sequence isomorphism needs short sequences");
  const Field& f = a.x().field();
  for (std::size_t i = 0; i < 3; ++i)
    if (a.terms[i].dim() != b.terms[i].dim()) return std::nullopt;
  HomSpace ha = hom_space(a.terms[0], b.terms[0]);
  HomSpace hb = hom_space(a.terms[1], b.terms[1]);
  HomSpace hc = hom_space(a.terms[2], b.terms[2]);
  if (!ha.dim() || !hb.dim() || !hc.dim()) return std::nullopt;
  // Unknown (alpha, beta, gamma): beta f = f' alpha and gamma g = g' beta.
  std::vector<Matrix> cols;
  auto column = [&](const Matrix& al, const Matrix& be, const Matrix& ga) {
    Matrix top = be * a.f().matrix() - b.f().matrix() * al;
    Matrix bot = ga * a.g().matrix() - b.g().matrix() * be;
    return Matrix::vstack(f, 1, {top.vec(), bot.vec()});
  };
  Matrix zx(f, b.terms[0].dim(), a.terms[0].dim()), ze(f, b.terms[1].dim(), a.terms[1].dim()),
      zy(f, b.terms[2].dim(), a.terms[2].dim());
  for (std::size_t k = 0; k < ha.dim(); ++k) cols.push_back(column(ha.basis_matrix(k), ze, zy));
  for (std::size_t k = 0; k < hb.dim(); ++k) cols.push_back(column(zx, hb.basis_matrix(k), zy));
  for (std::size_t k = 0; k < hc.dim(); ++k) cols.push_back(column(zx, ze, hc.basis_matrix(k)));
  Matrix sys = Matrix::hstack(f, cols.front().rows(), cols);
  Matrix sol = sys.kernel();
  if (sol.cols() == 0) return std::nullopt;
  auto build = [&](const Matrix& c) -> std::optional<SequenceIso> {
    Morphism al = ha.combination(c.block(0, 0, ha.dim(), 1));
    Morphism be = hb.combination(c.block(ha.dim(), 0, hb.dim(), 1));
    Morphism ga = hc.combination(c.block(ha.dim() + hb.dim(), 0, hc.dim(), 1));
    if (al.is_isomorphism() && be.is_isomorphism() && ga.is_isomorphism()) return SequenceIso{al, be, ga};
    return std::nullopt;
  };
  for (std::size_t k = 0; k < sol.cols(); ++k)
    if (auto r = build(sol.column(k))) return r;
  auto rng = make_rng(seed);
  for (int trial = 0; trial < 128; ++trial)
    if (auto r = build(sol * Matrix::random(f, sol.cols(), 1, rng))) return r;
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> summand_counts(const SequenceData& s, std::uint64_t seed) {
  Representation m = s.target_module();
  return {summands_outside_add(s.x(), m, seed), summands_outside_add(s.y(), m, seed)};
}

}  // namespace tiltkit
