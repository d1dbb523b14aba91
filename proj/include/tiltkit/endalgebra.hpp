#pragma once

#include <string>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/representation.hpp"

namespace tiltkit {

// End_A(V) for V = V_0 (+) ... (+) V_{k-1} with indecomposable V_i. Products
// follow left-to-right composition: b * c means b followed by c. Basis element
// 0 of each diagonal block is the summand idempotent.
struct EndAlgebra {
  AlgebraPtr algebra;
  Representation module;
  std::vector<Representation> summands;
  std::vector<Morphism> inclusions, projections;
  std::vector<Matrix> realization;  // basis element -> V x V matrix
  ColumnBasis realization_vecs;

  Matrix element_matrix(const Matrix& coords) const;
  Matrix coords_of(const Matrix& endo) const;
};

EndAlgebra end_algebra(const std::vector<Representation>& summands, const std::string& name = "End");
// Decomposes m first (GF(p), or split-local over Q).
EndAlgebra end_algebra(const Representation& m, const std::string& name = "End", std::uint64_t seed = 0);
std::vector<Representation> indecomposable_summands(const Representation& m, std::uint64_t seed = 0);
// One representative per isomorphism class of indecomposable summands, in order of appearance.
std::vector<Representation> distinct_indecomposables(const std::vector<Representation>& mods, std::uint64_t seed = 0);

// Hom_A(V, Z) as a left module over End(V): lambda . phi = lambda followed by phi.
HomModule hom_module(const EndAlgebra& lam, const Representation& z);
Morphism hom_map(const HomModule& src, const HomModule& dst, const Morphism& t);

}  // namespace tiltkit
