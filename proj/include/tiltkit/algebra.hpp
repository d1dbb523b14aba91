#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/matrix.hpp"

namespace tiltkit {

struct QuiverArrow {
  std::string name;
  std::string from;
  std::string to;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;

  std::size_t vertex_index(const std::string& v) const;
  std::size_t arrow_index(const std::string& a) const;
};

// Paths are arrow names in composition order: {"a","b"} is a followed by b.
struct RelationTerm {
  Scalar coeff;
  std::vector<std::string> path;
};
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  std::string name;
  Quiver quiver;
  std::vector<Relation> relations;
};

// Element of the algebra used to present modules compactly. An element of
// e_t A e_s maps e_s M into e_t M.
struct Generator {
  enum class Kind { idempotent, residue, arrow };
  Kind kind;
  std::size_t source;
  std::size_t target;
  Matrix element;  // coordinates, dim x 1
  std::string label;
};

class AlgebraTable;
using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

// Finite-dimensional algebra given by structure constants. Column j of
// left_mult(i) holds the coordinates of b_i * b_j. Modules are left modules,
// so the action of a product is the product of the actions.
class AlgebraTable {
 public:
  struct Spec {
    std::string name;
    Field field = Field::rational();
    std::vector<std::string> labels;
    std::vector<Matrix> left_mult;
    std::vector<Matrix> idempotents;               // complete set of orthogonal primitive idempotents
    std::optional<QuiverPresentation> presentation;
    std::optional<Matrix> radical;                  // columns; computed from the trace form if absent
    std::optional<std::vector<Generator>> generators;
  };

  explicit AlgebraTable(Spec spec);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> label_index(const std::string& label) const;
  const Matrix& left_mult(std::size_t i) const { return left_mult_[i]; }
  const std::optional<QuiverPresentation>& presentation() const { return presentation_; }

  Matrix unit_vector(std::size_t i) const { return Matrix::unit_column(field_, dim(), i); }
  Matrix one() const;
  Matrix product(const Matrix& x, const Matrix& y) const;
  // Matrix of y -> x * y.
  Matrix left_action(const Matrix& x) const;
  // Matrix of y -> y * x.
  Matrix right_action(const Matrix& x) const;

  std::size_t vertex_count() const { return idempotents_.size(); }
  const Matrix& idempotent(std::size_t v) const { return idempotents_[v]; }
  // Generators: the idempotents come first, in vertex order.
  const std::vector<Generator>& generators() const { return generators_; }

  const Matrix& radical() const { return radical_; }
  const ColumnBasis& radical_basis() const { return radical_cb_; }
  // Basis of e_t A e_s as columns.
  const Matrix& peirce(std::size_t t, std::size_t s) const { return peirce_[t * vertex_count() + s]; }
  // dim of e_v A e_v / e_v rad e_v
  std::size_t residue_dim(std::size_t v) const { return residue_dim_[v]; }
  // P(v) and P(w) are isomorphic iff their classes agree.
  std::size_t vertex_class(std::size_t v) const { return class_of_[v]; }
  const std::vector<std::size_t>& class_representatives() const { return class_reps_; }

  // Action of an arbitrary element, given the generator actions of a module.
  // Columns of vecs are acted on.
  Matrix act_on(const std::vector<Matrix>& gen_actions, const Matrix& element, const Matrix& vecs) const;
  // n x dim matrix sending element coordinates c to c . v for a fixed vector v.
  Matrix orbit_map(const std::vector<Matrix>& gen_actions, const Matrix& v) const;

  bool check_associative() const;
  bool check_unit() const;

 private:
  void compute_peirce();
  void compute_generators();
  void compute_classes();
  void compute_words();

  std::string name_;
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Matrix> left_mult_;
  std::vector<Matrix> idempotents_;
  std::optional<QuiverPresentation> presentation_;
  Matrix radical_;
  ColumnBasis radical_cb_;
  std::vector<Generator> generators_;
  std::vector<Matrix> peirce_;
  std::vector<std::size_t> residue_dim_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> class_reps_;
  // Word basis: word k is generator word_gen_[k] times word word_parent_[k].
  std::vector<std::size_t> word_gen_;
  std::vector<std::ptrdiff_t> word_parent_;
  Matrix word_inverse_;
};

inline constexpr std::size_t kDefaultClosureCap = 30;

// Quotient of the path algebra by the ideal generated by the relations.
AlgebraPtr build_algebra(const Field& field, const QuiverPresentation& pres, std::size_t cap = kDefaultClosureCap);

// Opposite algebra. opposite(opposite(A)) returns A itself.
AlgebraPtr opposite(const AlgebraPtr& a);
AlgebraPtr trivial_extension(const AlgebraPtr& a);
// A / I for a two-sided ideal spanned by the columns of ideal.
AlgebraPtr quotient_algebra(const AlgebraPtr& a, const Matrix& ideal, const std::string& name);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Rows index indecomposable projectives, columns simples, both over class representatives.
std::vector<std::vector<long>> cartan_matrix(const AlgebraTable& a);
mpz_class integer_determinant(const std::vector<std::vector<long>>& m);

}  // namespace tiltkit
