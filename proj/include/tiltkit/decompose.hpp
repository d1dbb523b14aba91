#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiltkit/representation.hpp"

namespace tiltkit {

// End(M) with its Jacobson radical, the latter from the trace form on M.
struct EndomorphismRing {
  HomSpace space;
  ColumnBasis radical;  // subspace of hom coordinates
  std::size_t residue_dim = 0;
};
EndomorphismRing endomorphism_ring(const Representation& m);
// End(M)/rad is one-dimensional, which certifies M indecomposable.
bool is_split_local(const Representation& m);

struct Summand {
  Representation module;
  Morphism inclusion;
  Morphism projection;
};

struct Decomposition {
  std::vector<Summand> summands;
  std::vector<std::size_t> iso_class;        // class index per summand
  std::vector<std::size_t> representatives;  // first summand of each class
  std::vector<std::size_t> multiplicities;   // per class
};

// Krull-Schmidt decomposition over GF(p) via Fitting splitting with random
// endomorphisms. Over Q only modules with split local End are accepted.
Decomposition decompose(const Representation& m, std::uint64_t seed = 0);

enum class IsoVerdict { isomorphic, not_isomorphic, inconclusive };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  std::optional<Morphism> witness;
  bool holds() const { return verdict == IsoVerdict::isomorphic; }
};
IsoResult is_isomorphic(const Representation& a, const Representation& b, std::uint64_t seed = 0);

// candidate lies in add(m): id factors as a sum of composites through m.
bool in_add(const Representation& candidate, const Representation& m);
// Number of indecomposable summands of x, with multiplicity, not lying in add(m).
std::size_t summands_outside_add(const Representation& x, const Representation& m, std::uint64_t seed = 0);

}  // namespace tiltkit
