#include "tiltkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "tiltkit/error.hpp"

namespace tiltkit {

std::size_t Quiver::vertex_index(const std::string& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return i;
  throw InputError("unknown vertex '" + v + "'");
}

std::size_t Quiver::arrow_index(const std::string& a) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == a) return i;
  throw InputError("unknown arrow '" + a + "'");
}

namespace {

// Incremental span with reduced vectors kept in insertion order.
class EchelonSpan {
 public:
  EchelonSpan(const Field& f, std::size_t n) : field_(f), n_(n) {}

  // Returns true and stores v if independent of the current span.
  bool add(const Matrix& v) {
    Matrix r = reduce(v);
    for (std::size_t i = 0; i < n_; ++i) {
      if (r.entry_is_zero(i, 0)) continue;
      Scalar inv = Scalar(field_, 1) / r.at(i, 0);
      rows_.push_back(r.scaled(inv));
      pivots_.push_back(i);
      return true;
    }
    return false;
  }
  bool contains(const Matrix& v) const { return reduce(v).is_zero(); }
  std::size_t dim() const { return rows_.size(); }

 private:
  Matrix reduce(Matrix v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (v.entry_is_zero(pivots_[k], 0)) continue;
      v.add_scaled(rows_[k], -v.at(pivots_[k], 0));
    }
    return v;
  }
  Field field_;
  std::size_t n_;
  std::vector<Matrix> rows_;
  std::vector<std::size_t> pivots_;
};

Matrix span_columns(const Field& f, std::size_t n, const std::vector<Matrix>& cols) {
  return Matrix::hstack(f, n, cols);
}

// Greedy complement: columns of candidates not in span(base + chosen so far).
std::vector<Matrix> greedy_complement(const Field& f, std::size_t n, const Matrix& base, const Matrix& candidates) {
  EchelonSpan span(f, n);
  for (std::size_t j = 0; j < base.cols(); ++j) span.add(base.column(j));
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < candidates.cols(); ++j) {
    Matrix c = candidates.column(j);
    if (span.add(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

AlgebraTable::AlgebraTable(Spec spec)
    : name_(std::move(spec.name)),
      field_(spec.field),
      labels_(std::move(spec.labels)),
      left_mult_(std::move(spec.left_mult)),
      idempotents_(std::move(spec.idempotents)),
      presentation_(std::move(spec.presentation)) {
  const std::size_t d = labels_.size();
  if (left_mult_.size() != d) throw InputError("structure table size mismatch");
  for (const auto& l : left_mult_)
    if (l.rows() != d || l.cols() != d || !(l.field() == field_)) throw InputError("structure table shape mismatch");
  if (spec.radical) {
    radical_ = *spec.radical;
  } else {
    if (field_.is_prime() && field_.characteristic() <= d)
      throw FieldError("field characteristic " + std::to_string(field_.characteristic()) +
                       " must exceed the algebra dimension " + std::to_string(d) + " for the trace-form radical");
    Matrix traces(field_, 1, d);
    for (std::size_t k = 0; k < d; ++k) traces.set(0, k, left_mult_[k].trace());
    Matrix gram(field_, d, d);
    for (std::size_t i = 0; i < d; ++i) gram.set_block(i, 0, traces * left_mult_[i]);
    radical_ = gram.kernel();
  }
  radical_cb_ = ColumnBasis(field_, d, radical_);
  radical_ = radical_cb_.basis();
  compute_peirce();
  if (spec.generators)
    generators_ = std::move(*spec.generators);
  else
    compute_generators();
  compute_classes();
  compute_words();
}

std::optional<std::size_t> AlgebraTable::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Matrix AlgebraTable::one() const {
  Matrix u(field_, dim(), 1);
  for (const auto& e : idempotents_) u = u + e;
  return u;
}

Matrix AlgebraTable::left_action(const Matrix& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x.entry_is_zero(i, 0)) m.add_scaled(left_mult_[i], x.at(i, 0));
  return m;
}

Matrix AlgebraTable::right_action(const Matrix& x) const {
  Matrix m(field_, dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_block(0, j, left_mult_[j] * x);
  return m;
}

Matrix AlgebraTable::product(const Matrix& x, const Matrix& y) const { return left_action(x) * y; }

void AlgebraTable::compute_peirce() {
  const std::size_t k = vertex_count();
  peirce_.assign(k * k, Matrix(field_, dim(), 0));
  residue_dim_.assign(k, 0);
  std::vector<Matrix> left(k), right(k);
  for (std::size_t v = 0; v < k; ++v) {
    left[v] = left_action(idempotents_[v]);
    right[v] = right_action(idempotents_[v]);
  }
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) peirce_[t * k + s] = (left[t] * right[s]).column_space();
  for (std::size_t v = 0; v < k; ++v) {
    Matrix rad_block = (left[v] * right[v] * radical_);
    std::size_t rad_dim = rad_block.cols() ? rad_block.rank() : 0;
    residue_dim_[v] = peirce(v, v).cols() - rad_dim;
  }
}

void AlgebraTable::compute_generators() {
  const std::size_t k = vertex_count(), d = dim();
  generators_.clear();
  for (std::size_t v = 0; v < k; ++v)
    generators_.push_back({Generator::Kind::idempotent, v, v, idempotents_[v], "e" + std::to_string(v)});
  std::vector<Matrix> rad_sq_cols;
  for (std::size_t i = 0; i < radical_.cols(); ++i)
    for (std::size_t j = 0; j < radical_.cols(); ++j) {
      Matrix p = product(radical_.column(i), radical_.column(j));
      if (!p.is_zero()) rad_sq_cols.push_back(std::move(p));
    }
  Matrix rad_sq = span_columns(field_, d, rad_sq_cols);
  std::vector<Matrix> left(k), right(k);
  for (std::size_t v = 0; v < k; ++v) {
    left[v] = left_action(idempotents_[v]);
    right[v] = right_action(idempotents_[v]);
  }
  std::vector<Generator> residues, arrows;
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < k; ++s) {
      Matrix proj = left[t] * right[s];
      Matrix rad_block = radical_.cols() ? (proj * radical_) : Matrix(field_, d, 0);
      Matrix sq_block = rad_sq.cols() ? (proj * rad_sq) : Matrix(field_, d, 0);
      Matrix base = rad_block;
      if (t == s) base = Matrix::hstack(field_, d, {rad_block, idempotents_[s]});
      for (auto& r : greedy_complement(field_, d, base, peirce(t, s)))
        residues.push_back({Generator::Kind::residue, s, t, std::move(r), ""});
      for (auto& a : greedy_complement(field_, d, sq_block, rad_block.cols() ? rad_block.column_space() : rad_block))
        arrows.push_back({Generator::Kind::arrow, s, t, std::move(a), ""});
    }
  for (auto& g : residues) {
    g.label = "r" + std::to_string(generators_.size());
    generators_.push_back(std::move(g));
  }
  for (auto& g : arrows) {
    g.label = "a" + std::to_string(generators_.size());
    generators_.push_back(std::move(g));
  }
}

void AlgebraTable::compute_classes() {
  const std::size_t k = vertex_count();
  class_of_.resize(k);
  std::iota(class_of_.begin(), class_of_.end(), 0);
  auto find = [&](std::size_t x) {
    while (class_of_[x] != x) x = class_of_[x];
    return x;
  };
  for (std::size_t v = 0; v < k; ++v)
    for (std::size_t w = v + 1; w < k; ++w) {
      if (find(v) == find(w)) continue;
      const Matrix& xs = peirce(v, w);
      const Matrix& ys = peirce(w, v);
      bool joined = false;
      for (std::size_t i = 0; i < xs.cols() && !joined; ++i)
        for (std::size_t j = 0; j < ys.cols() && !joined; ++j)
          if (!radical_cb_.contains(product(xs.column(i), ys.column(j)))) joined = true;
      if (joined) class_of_[find(w)] = find(v);
    }
  std::vector<std::size_t> rep_of(k, k);
  class_reps_.clear();
  for (std::size_t v = 0; v < k; ++v) {
    std::size_t r = find(v);
    if (rep_of[r] == k) {
      rep_of[r] = v;
      class_reps_.push_back(v);
    }
    class_of_[v] = rep_of[r];
  }
}

void AlgebraTable::compute_words() {
  const std::size_t d = dim();
  word_gen_.clear();
  word_parent_.clear();
  if (d == 0) {
    word_inverse_ = Matrix(field_, 0, 0);
    return;
  }
  EchelonSpan span(field_, d);
  std::vector<Matrix> vecs;
  for (std::size_t g = 0; g < generators_.size(); ++g)
    if (span.add(generators_[g].element)) {
      word_gen_.push_back(g);
      word_parent_.push_back(-1);
      vecs.push_back(generators_[g].element);
    }
  for (std::size_t w = 0; w < vecs.size() && vecs.size() < d; ++w)
    for (std::size_t g = 0; g < generators_.size() && vecs.size() < d; ++g) {
      Matrix c = product(generators_[g].element, vecs[w]);
      if (span.add(c)) {
        word_gen_.push_back(g);
        word_parent_.push_back(static_cast<std::ptrdiff_t>(w));
        vecs.push_back(std::move(c));
      }
    }
  if (vecs.size() != d) throw InputError("generators do not generate the algebra");
  auto inv = Matrix::hstack(field_, d, vecs).inverse();
  if (!inv) throw InvariantError("word basis singular");
  word_inverse_ = std::move(*inv);
}

Matrix AlgebraTable::act_on(const std::vector<Matrix>& gen_actions, const Matrix& element, const Matrix& vecs) const {
  Matrix coeffs = word_inverse_ * element;
  Matrix result(field_, vecs.rows(), vecs.cols());
  std::vector<Matrix> images;
  images.reserve(word_gen_.size());
  for (std::size_t k = 0; k < word_gen_.size(); ++k) {
    const Matrix& base = word_parent_[k] < 0 ? vecs : images[static_cast<std::size_t>(word_parent_[k])];
    images.push_back(gen_actions[word_gen_[k]] * base);
    if (!coeffs.entry_is_zero(k, 0)) result.add_scaled(images.back(), coeffs.at(k, 0));
  }
  return result;
}

Matrix AlgebraTable::orbit_map(const std::vector<Matrix>& gen_actions, const Matrix& v) const {
  std::vector<Matrix> images;
  images.reserve(word_gen_.size());
  for (std::size_t k = 0; k < word_gen_.size(); ++k) {
    const Matrix& base = word_parent_[k] < 0 ? v : images[static_cast<std::size_t>(word_parent_[k])];
    images.push_back(gen_actions[word_gen_[k]] * base);
  }
  return Matrix::hstack(field_, v.rows(), images) * word_inverse_;
}

bool AlgebraTable::check_associative() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      // L_{b_i b_j} = L_i L_j
      Matrix lhs = left_action(left_mult_[i].column(j));
      if (!(lhs == left_mult_[i] * left_mult_[j])) return false;
    }
  return true;
}

bool AlgebraTable::check_unit() const {
  Matrix u = one();
  if (!left_action(u).is_identity()) return false;
  if (!right_action(u).is_identity()) return false;
  for (std::size_t v = 0; v < vertex_count(); ++v)
    for (std::size_t w = 0; w < vertex_count(); ++w) {
      Matrix p = product(idempotents_[v], idempotents_[w]);
      if (!(p == (v == w ? idempotents_[v] : Matrix(field_, dim(), 1)))) return false;
    }
  return true;
}

namespace {

struct Path {
  std::size_t start, end;
  std::vector<std::size_t> arrows;
};

std::vector<std::size_t> resolve_path(const Quiver& q, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(q.arrow_index(n));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (q.arrows[out[i - 1]].to != q.arrows[out[i]].from)
      throw InputError("relation path is not composable at arrow '" + names[i] + "'");
  return out;
}

class PathIndex {
 public:
  PathIndex(const Quiver& q, std::size_t max_len, std::size_t guard) : q_(q) {
    const std::size_t nv = q.vertices.size();
    for (std::size_t v = 0; v < nv; ++v) paths_.push_back({v, v, {}});
    by_len_.push_back({0, paths_.size()});
    for (std::size_t len = 1; len <= max_len; ++len) {
      auto [b, e] = by_len_.back();
      for (std::size_t i = b; i < e; ++i)
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          std::size_t from = q.vertex_index(q.arrows[a].from);
          if (from != paths_[i].end) continue;
          Path p = paths_[i];
          p.arrows.push_back(a);
          p.end = q.vertex_index(q.arrows[a].to);
          if (len == 1) p.start = from;
          paths_.push_back(std::move(p));
          if (paths_.size() > guard) throw CapExceeded("ideal not admissible or cap too low (path count)");
        }
      by_len_.push_back({e, paths_.size()});
    }
    for (std::size_t i = nv; i < paths_.size(); ++i) index_[paths_[i].arrows] = i;
  }

  std::size_t size() const { return paths_.size(); }
  const Path& at(std::size_t i) const { return paths_[i]; }
  std::pair<std::size_t, std::size_t> length_range(std::size_t len) const { return by_len_[len]; }
  std::optional<std::size_t> find(const std::vector<std::size_t>& arrows) const {
    auto it = index_.find(arrows);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  const Quiver& q_;
  std::vector<Path> paths_;
  std::vector<std::pair<std::size_t, std::size_t>> by_len_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.start];
  bool short_names = std::all_of(q.arrows.begin(), q.arrows.end(), [](const auto& a) { return a.name.size() == 1; });
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i && !short_names) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

}  // namespace

AlgebraPtr build_algebra(const Field& field, const QuiverPresentation& pres, std::size_t cap) {
  const Quiver& q = pres.quiver;
  if (q.vertices.empty()) throw InputError("quiver has no vertices");
  for (const auto& a : q.arrows) {
    q.vertex_index(a.from);
    q.vertex_index(a.to);
  }
  struct Rel {
    std::vector<std::pair<Scalar, std::vector<std::size_t>>> terms;
    std::size_t start, end, min_len, max_len;
  };
  std::vector<Rel> rels;
  std::size_t spread = 0;
  for (const auto& r : pres.relations) {
    Rel rel{{}, 0, 0, SIZE_MAX, 0};
    for (const auto& t : r) {
      if (!(t.coeff.field() == field)) throw InputError("relation coefficient over the wrong field");
      if (t.coeff.is_zero()) continue;
      auto arrows = resolve_path(q, t.path);
      if (arrows.size() < 2) throw InputError("ideal not admissible: relation term of length < 2");
      std::size_t s = q.vertex_index(q.arrows[arrows.front()].from), e = q.vertex_index(q.arrows[arrows.back()].to);
      if (rel.terms.empty()) {
        rel.start = s;
        rel.end = e;
      } else if (s != rel.start || e != rel.end) {
        throw InputError("relation terms have different endpoints");
      }
      rel.min_len = std::min(rel.min_len, arrows.size());
      rel.max_len = std::max(rel.max_len, arrows.size());
      rel.terms.push_back({t.coeff, std::move(arrows)});
    }
    if (rel.terms.empty()) continue;
    spread = std::max(spread, rel.max_len - rel.min_len);
    rels.push_back(std::move(rel));
  }

  constexpr std::size_t kPathGuard = 20000;
  for (std::size_t level = 1; level <= cap; ++level) {
    PathIndex paths(q, level, kPathGuard);
    const std::size_t np = paths.size();
    auto column = [np](std::size_t path) { return np - 1 - path; };
    // Generators u * rho * v of the ideal with every term of length <= level.
    std::vector<Matrix> rows;
    for (const auto& rel : rels) {
      if (rel.max_len > level) continue;
      const std::size_t room = level - rel.max_len;
      for (std::size_t lu = 0; lu <= room; ++lu) {
        auto [ub, ue] = paths.length_range(lu);
        for (std::size_t u = ub; u < ue; ++u) {
          if (paths.at(u).end != rel.start) continue;
          for (std::size_t lv = 0; lu + lv <= room; ++lv) {
            auto [vb, ve] = paths.length_range(lv);
            for (std::size_t v = vb; v < ve; ++v) {
              if (paths.at(v).start != rel.end) continue;
              Matrix row(field, 1, np);
              for (const auto& [c, t] : rel.terms) {
                std::vector<std::size_t> full = paths.at(u).arrows;
                full.insert(full.end(), t.begin(), t.end());
                full.insert(full.end(), paths.at(v).arrows.begin(), paths.at(v).arrows.end());
                std::size_t idx = *paths.find(full);
                row.set(0, column(idx), row.at(0, column(idx)) + c);
              }
              rows.push_back(std::move(row));
            }
          }
        }
      }
    }
    Matrix gens = rows.empty() ? Matrix(field, 0, np) : Matrix::vstack(field, np, rows);
    auto [red, piv] = gens.rref();
    std::vector<std::ptrdiff_t> pivot_row(np, -1);
    for (std::size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<std::ptrdiff_t>(r);
    auto reduce = [&](std::size_t path) {
      Matrix v(field, 1, np);
      v.set(0, column(path), 1);
      for (std::size_t r = 0; r < piv.size(); ++r) {
        if (v.entry_is_zero(0, piv[r])) continue;
        v.add_scaled(red.row(r), -v.at(0, piv[r]));
      }
      return v;
    };
    // Every path of length in [level - spread, level] must lie in the ideal.
    bool closed = true;
    for (std::size_t len = level > spread ? level - spread : 0; len <= level && closed; ++len) {
      auto [b, e] = paths.length_range(len);
      for (std::size_t p = b; p < e && closed; ++p)
        if (!reduce(p).is_zero()) closed = false;
    }
    if (!closed) continue;

    std::vector<std::size_t> basis_paths;
    std::vector<std::ptrdiff_t> basis_pos(np, -1);
    for (std::size_t p = 0; p < np; ++p)
      if (pivot_row[column(p)] < 0) {
        basis_pos[p] = static_cast<std::ptrdiff_t>(basis_paths.size());
        basis_paths.push_back(p);
      }
    const std::size_t d = basis_paths.size();
    auto coords_of = [&](std::size_t path) {
      Matrix v = reduce(path);
      Matrix c(field, d, 1);
      for (std::size_t p = 0; p < np; ++p) {
        if (v.entry_is_zero(0, column(p))) continue;
        if (basis_pos[p] < 0) throw InvariantError("normal form left a non-basis path");
        c.set(static_cast<std::size_t>(basis_pos[p]), 0, v.at(0, column(p)));
      }
      return c;
    };
    AlgebraTable::Spec spec;
    spec.name = pres.name;
    spec.field = field;
    spec.presentation = pres;
    for (auto p : basis_paths) spec.labels.push_back(path_label(q, paths.at(p)));
    spec.left_mult.assign(d, Matrix(field, d, d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        // b_i * b_j is b_j followed by b_i.
        const Path& pi = paths.at(basis_paths[i]);
        const Path& pj = paths.at(basis_paths[j]);
        if (pj.end != pi.start) continue;
        Matrix c(field, d, 1);
        if (pi.arrows.empty()) {
          c = Matrix::unit_column(field, d, j);
        } else if (pj.arrows.empty()) {
          c = Matrix::unit_column(field, d, i);
        } else {
          std::vector<std::size_t> cat = pj.arrows;
          cat.insert(cat.end(), pi.arrows.begin(), pi.arrows.end());
          if (cat.size() > level) continue;
          c = coords_of(*paths.find(cat));
        }
        spec.left_mult[i].set_block(0, j, c);
      }
    std::vector<Matrix> rad_cols;
    for (std::size_t i = 0; i < d; ++i) {
      if (i < q.vertices.size()) {
        spec.idempotents.push_back(Matrix::unit_column(field, d, i));
      } else {
        rad_cols.push_back(Matrix::unit_column(field, d, i));
      }
    }
    spec.radical = Matrix::hstack(field, d, rad_cols);
    std::vector<Generator> gens_out;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      gens_out.push_back({Generator::Kind::idempotent, v, v, Matrix::unit_column(field, d, v), "e_" + q.vertices[v]});
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      auto idx = paths.find({a});
      if (!idx || basis_pos[*idx] < 0) throw InvariantError("arrow fell into the ideal");
      gens_out.push_back({Generator::Kind::arrow, q.vertex_index(q.arrows[a].from), q.vertex_index(q.arrows[a].to),
                          Matrix::unit_column(field, d, static_cast<std::size_t>(basis_pos[*idx])), q.arrows[a].name});
    }
    spec.generators = std::move(gens_out);
    if (field.is_prime() && field.characteristic() <= d)
      throw FieldError("field too small: characteristic " + std::to_string(field.characteristic()) +
                       " must exceed the algebra dimension " + std::to_string(d));
    return std::make_shared<const AlgebraTable>(std::move(spec));
  }
  throw CapExceeded("ideal not admissible or cap too low (closure cap " + std::to_string(cap) + ")");
}

namespace {
struct OppositeEntry {
  std::weak_ptr<const AlgebraTable> self;
  std::weak_ptr<const AlgebraTable> op;
};
std::mutex g_op_mutex;
std::map<const AlgebraTable*, OppositeEntry> g_op_registry;
}  // namespace

AlgebraPtr opposite(const AlgebraPtr& a) {
  std::lock_guard<std::mutex> lock(g_op_mutex);
  auto it = g_op_registry.find(a.get());
  if (it != g_op_registry.end() && it->second.self.lock() == a)
    if (auto op = it->second.op.lock()) return op;
  const std::size_t d = a->dim();
  AlgebraTable::Spec spec;
  spec.name = a->name() + "^op";
  spec.field = a->field();
  spec.labels = a->labels();
  spec.left_mult.assign(d, Matrix(a->field(), d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) spec.left_mult[i].set_block(0, j, a->left_mult(j).column(i));
  for (std::size_t v = 0; v < a->vertex_count(); ++v) spec.idempotents.push_back(a->idempotent(v));
  spec.radical = a->radical();
  std::vector<Generator> gens = a->generators();
  for (auto& g : gens) std::swap(g.source, g.target);
  spec.generators = std::move(gens);
  if (a->presentation()) {
    QuiverPresentation p = *a->presentation();
    p.name = spec.name;
    for (auto& arrow : p.quiver.arrows) std::swap(arrow.from, arrow.to);
    for (auto& rel : p.relations)
      for (auto& t : rel) std::reverse(t.path.begin(), t.path.end());
    spec.presentation = std::move(p);
  }
  auto op = std::make_shared<const AlgebraTable>(std::move(spec));
  for (auto ptr = g_op_registry.begin(); ptr != g_op_registry.end();)
    ptr = ptr->second.self.expired() ? g_op_registry.erase(ptr) : std::next(ptr);
  g_op_registry[a.get()] = {a, op};
  g_op_registry[op.get()] = {op, a};
  return op;
}

AlgebraPtr trivial_extension(const AlgebraPtr& a) {
  const std::size_t d = a->dim(), n = 2 * d;
  const Field& f = a->field();
  AlgebraTable::Spec spec;
  spec.name = "T(" + a->name() + ")";
  spec.field = f;
  for (const auto& l : a->labels()) spec.labels.push_back(l);
  for (const auto& l : a->labels()) spec.labels.push_back(l + "*");
  spec.left_mult.assign(n, Matrix(f, n, n));
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix& li = a->left_mult(i);
    spec.left_mult[i].set_block(0, 0, li);
    for (std::size_t j = 0; j < d; ++j) {
      // (b_i . b_j^*)(b_k) = b_j^*(b_k b_i)
      Matrix c(f, n, 1);
      for (std::size_t k = 0; k < d; ++k) c.set(d + k, 0, a->left_mult(k).at(j, i));
      spec.left_mult[i].set_block(0, d + j, c);
    }
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      // (b_j^* . b_i)(b_k) = b_j^*(b_i b_k)
      Matrix c(f, n, 1);
      for (std::size_t k = 0; k < d; ++k) c.set(d + k, 0, a->left_mult(i).at(j, k));
      spec.left_mult[d + j].set_block(0, i, c);
    }
  for (std::size_t v = 0; v < a->vertex_count(); ++v)
    spec.idempotents.push_back(Matrix::vstack(f, 1, {a->idempotent(v), Matrix(f, d, 1)}));
  Matrix rad(f, n, a->radical().cols() + d);
  rad.set_block(0, 0, a->radical());
  rad.set_block(d, a->radical().cols(), Matrix::identity(f, d));
  spec.radical = rad;
  return std::make_shared<const AlgebraTable>(std::move(spec));
}

AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Matrix& ideal, const std::string& name) {
  const Field& f = a->field();
  const std::size_t d = a->dim();
  ColumnBasis ib(f, d, ideal.cols() ? ideal : Matrix(f, d, 0));
  // Ideal check: closed under left and right multiplication by basis elements.
  for (std::size_t k = 0; k < ib.dim(); ++k)
    for (std::size_t i = 0; i < d; ++i) {
      Matrix x = ib.basis().column(k);
      if (!ib.contains(a->product(a->unit_vector(i), x)) || !ib.contains(a->product(x, a->unit_vector(i))))
        throw InvariantError("quotient_algebra: span is not a two-sided ideal");
    }
  std::vector<Matrix> chosen;
  std::vector<std::string> labels;
  std::vector<std::size_t> kept_idem;
  EchelonSpan span(f, d);
  for (std::size_t k = 0; k < ib.dim(); ++k) span.add(ib.basis().column(k));
  for (std::size_t v = 0; v < a->vertex_count(); ++v)
    if (span.add(a->idempotent(v))) {
      kept_idem.push_back(chosen.size());
      chosen.push_back(a->idempotent(v));
    }
  for (std::size_t i = 0; i < d; ++i)
    if (span.add(a->unit_vector(i))) chosen.push_back(a->unit_vector(i));
  // Labels: the first basis label whose class matches, else a generic name.
  for (const auto& c : chosen) {
    std::string label = "q" + std::to_string(labels.size());
    for (std::size_t i = 0; i < d; ++i)
      if (c == a->unit_vector(i)) label = a->labels()[i];
    labels.push_back(label);
  }
  const std::size_t qd = chosen.size();
  SplitBasis split(f, d, ib.dim() ? ib.basis() : Matrix(f, d, 0));
  Matrix reps = Matrix::hstack(f, d, {ib.basis(), Matrix::hstack(f, d, chosen)});
  auto to_quot = reps.inverse();
  if (!to_quot) throw InvariantError("quotient_algebra: basis not complementary");
  auto project = [&](const Matrix& x) { return ((*to_quot) * x).block(ib.dim(), 0, qd, x.cols()); };
  AlgebraTable::Spec spec;
  spec.name = name;
  spec.field = f;
  spec.labels = labels;
  spec.left_mult.assign(qd, Matrix(f, qd, qd));
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = 0; j < qd; ++j) spec.left_mult[i].set_block(0, j, project(a->product(chosen[i], chosen[j])));
  for (auto v : kept_idem) spec.idempotents.push_back(Matrix::unit_column(f, qd, v));
  std::vector<Matrix> rad_cols;
  for (std::size_t k = 0; k < a->radical().cols(); ++k) rad_cols.push_back(project(a->radical().column(k)));
  spec.radical = Matrix::hstack(f, qd, rad_cols);
  return std::make_shared<const AlgebraTable>(std::move(spec));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (!(a->field() == b->field()) || a->dim() != b->dim() || a->vertex_count() != b->vertex_count()) return false;
  for (std::size_t i = 0; i < a->dim(); ++i)
    if (!(a->left_mult(i) == b->left_mult(i))) return false;
  for (std::size_t v = 0; v < a->vertex_count(); ++v)
    if (!(a->idempotent(v) == b->idempotent(v))) return false;
  if (a->generators().size() != b->generators().size()) return false;
  for (std::size_t g = 0; g < a->generators().size(); ++g)
    if (!(a->generators()[g].element == b->generators()[g].element)) return false;
  return true;
}

std::vector<std::vector<long>> cartan_matrix(const AlgebraTable& a) {
  const auto& reps = a.class_representatives();
  std::vector<std::vector<long>> c(reps.size(), std::vector<long>(reps.size(), 0));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      // [P_i : S_j] = dim e_j A e_i / dim End(S_j)
      std::size_t block = a.peirce(reps[j], reps[i]).cols();
      c[i][j] = static_cast<long>(block / a.residue_dim(reps[j]));
    }
  return c;
}

mpz_class integer_determinant(const std::vector<std::vector<long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Matrix q(Field::rational(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.set(i, j, m[i][j]);
  mpq_class det = q.determinant().rational();
  if (det.get_den() != 1) throw InvariantError("integer determinant is not integral");
  return det.get_num();
}

}  // namespace tiltkit
