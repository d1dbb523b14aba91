#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit {

// Finite-dimensional left module, stored by the action matrices of the
// algebra's generators. Immutable and cheap to copy.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr alg, std::size_t dim, std::vector<Matrix> gen_actions, std::string label = "");

  static Representation zero(const AlgebraPtr& alg);
  static Representation regular(const AlgebraPtr& alg);
  // Per-vertex dimensions and per-arrow matrices (rows: target vertex space).
  static Representation from_quiver(const AlgebraPtr& alg, const std::map<std::string, std::size_t>& dims,
                                    const std::map<std::string, Matrix>& arrows, std::string label = "");
  // One action matrix per basis element; checked against the structure constants.
  static Representation from_basis_actions(const AlgebraPtr& alg, const std::vector<Matrix>& actions,
                                           std::string label = "");

  bool valid() const { return static_cast<bool>(d_); }
  const AlgebraPtr& algebra() const { return d_->alg; }
  const Field& field() const { return d_->alg->field(); }
  std::size_t dim() const { return d_->dim; }
  const std::string& label() const { return d_->label; }
  Representation with_label(std::string label) const;

  const std::vector<Matrix>& gen_actions() const { return d_->gens; }
  const Matrix& gen_action(std::size_t g) const { return d_->gens[g]; }
  // Action of an algebra element given by coordinates.
  Matrix action(const Matrix& element) const;
  Matrix act(const Matrix& element, const Matrix& vecs) const;
  Matrix basis_action(std::size_t i) const { return action(d_->alg->unit_vector(i)); }

  // Vertex-adapted frame: columns of frame() are bases of e_v M, in vertex order.
  const std::vector<std::size_t>& dim_vector() const { return d_->vdims; }
  const std::vector<std::size_t>& vertex_offsets() const { return d_->voffsets; }
  const Matrix& frame() const { return d_->frame; }
  const Matrix& coframe() const { return d_->coframe; }

  // Full check of the module axioms against the structure constants.
  bool validate() const;

 private:
  struct Data {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Matrix> gens;
    std::string label;
    std::vector<std::size_t> vdims, voffsets;
    Matrix frame, coframe;
  };
  std::shared_ptr<const Data> d_;
};

// Module homomorphism; matrix is target.dim x source.dim.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Representation src, Representation dst, Matrix m);

  static Morphism identity(const Representation& m);
  static Morphism zero(const Representation& src, const Representation& dst);

  const Representation& source() const { return src_; }
  const Representation& target() const { return dst_; }
  const Matrix& matrix() const { return m_; }
  const Field& field() const { return src_.field(); }

  // this followed by g
  Morphism then(const Morphism& g) const;
  Morphism operator+(const Morphism& o) const;
  Morphism operator-(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;

  bool is_homomorphism() const;
  bool is_zero() const { return m_.is_zero(); }
  bool is_injective() const { return m_.rank() == src_.dim(); }
  bool is_surjective() const { return m_.rank() == dst_.dim(); }
  bool is_isomorphism() const { return src_.dim() == dst_.dim() && is_injective(); }

 private:
  Representation src_, dst_;
  Matrix m_;
};

// f followed by g
Morphism compose(const Morphism& f, const Morphism& g);

// Hom_A(M, N) with a fixed basis and coordinate extraction.
class HomSpace {
 public:
  HomSpace() = default;
  HomSpace(Representation src, Representation dst, std::vector<Matrix> basis);

  const Representation& source() const { return src_; }
  const Representation& target() const { return dst_; }
  std::size_t dim() const { return basis_.size(); }
  const Matrix& basis_matrix(std::size_t k) const { return basis_[k]; }
  Morphism element(std::size_t k) const { return Morphism(src_, dst_, basis_[k]); }
  Morphism combination(const Matrix& coeffs) const;
  std::optional<Matrix> coords(const Matrix& map) const;
  Matrix coords_or_throw(const Matrix& map) const;

 private:
  Representation src_, dst_;
  std::vector<Matrix> basis_;
  ColumnBasis vecs_;
};

HomSpace hom_space(const Representation& m, const Representation& n);

// A Hom space together with the module structure it carries.
struct HomModule {
  Representation module;
  HomSpace space;
};
std::size_t hom_dim(const Representation& m, const Representation& n);
// Hom(V, a) -> Hom(V, b) for t: a -> b, as a matrix in the two bases.
Matrix post_map(const HomSpace& from, const HomSpace& to, const Matrix& t);
// Hom(b, Z) -> Hom(a, Z) for s: a -> b.
Matrix pre_map(const HomSpace& from, const HomSpace& to, const Matrix& s);

struct DirectSum {
  Representation module;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const AlgebraPtr& alg, const std::vector<Representation>& parts);
Representation direct_sum_module(const AlgebraPtr& alg, const std::vector<Representation>& parts);

struct Submodule {
  Representation module;
  Morphism inclusion;
};
struct Quotient {
  Representation module;
  Morphism projection;
  SplitBasis split;
};

// Columns of basis must span an invariant subspace.
Submodule submodule(const Representation& m, const Matrix& basis, std::string label = "");
// Smallest submodule containing the given columns.
Submodule generated_submodule(const Representation& m, const Matrix& vecs, std::string label = "");
Quotient quotient(const Representation& m, const Matrix& sub_span, std::string label = "");
Submodule kernel(const Morphism& f);
Submodule image(const Morphism& f);
Quotient cokernel(const Morphism& f);
// Lift of a map into the target of an epimorphism; none if no lift exists.
std::optional<Morphism> lift_through(const Morphism& h, const Morphism& epi);

Submodule radical_submodule(const Representation& m);
Quotient top(const Representation& m);
Submodule socle(const Representation& m);

// D M = Hom_k(M, k) as a module over the opposite algebra.
Representation dual(const Representation& m);
Morphism dual(const Morphism& f);
// Transport a module over a structurally identical algebra to a given pointer.
Representation rebase(const Representation& m, const AlgebraPtr& alg);

// Indecomposable projective A e_v, with the element e_v as generator.
struct VertexProjective {
  Representation module;
  Matrix basis_in_regular;  // columns: basis of A e_v in A
};
VertexProjective vertex_projective(const AlgebraPtr& alg, std::size_t v);
Representation simple_module(const AlgebraPtr& alg, std::size_t v);
Representation injective_module(const AlgebraPtr& alg, std::size_t v);

}  // namespace tiltkit
