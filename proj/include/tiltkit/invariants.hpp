#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tiltkit/endalgebra.hpp"
#include "tiltkit/homological.hpp"

namespace tiltkit {

struct AlgebraInvariants {
  std::string name;
  std::size_t dim = 0;
  std::size_t simples = 0;
  std::vector<std::vector<long>> cartan;
  mpz_class cartan_det;
  Dimension gl_dim;
  std::vector<std::vector<std::size_t>> ext1;  // dim Ext^1(S_i, S_j) over class representatives
  std::size_t arrows = 0;
};
AlgebraInvariants invariants(const AlgebraPtr& alg, std::size_t cap = kDefaultDimensionCap);

struct Comparison {
  bool simples_equal = false;
  bool det_equal = false;
  std::optional<std::size_t> gl_gap;  // unset unless both sides are finite
  bool gap_ok = false;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;  // recorded claims that are not checked
  bool ok() const { return mismatches.empty(); }
};
// Gap check: both finite with |difference| <= n, or neither finite.
Comparison compare(const AlgebraInvariants& a, const AlgebraInvariants& b, std::size_t n);

struct StableEndAlgebra {
  EndAlgebra end;
  Matrix ideal;          // End coordinates of maps factoring through a projective
  AlgebraPtr quotient;   // null when the quotient is zero
  std::size_t dim() const { return end.algebra->dim() - ideal.cols(); }
};
StableEndAlgebra stable_end(const Representation& m, std::uint64_t seed = 0);

}  // namespace tiltkit
