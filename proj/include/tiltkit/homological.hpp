#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/representation.hpp"

namespace tiltkit {

inline constexpr std::size_t kDefaultDimensionCap = 20;

struct ProjectiveCover {
  Representation projective;
  Morphism cover;                     // projective -> M, surjective
  std::vector<std::size_t> vertices;  // vertex of each indecomposable summand
};

// Minimal cover: generators lift a basis of top(M) vertex by vertex.
ProjectiveCover projective_cover(const Representation& m);
// Non-minimal cover using one summand A e_v per vertex-frame basis vector.
ProjectiveCover frame_cover(const Representation& m);

struct SyzygyData {
  ProjectiveCover cover;
  Submodule kernel;  // Omega M inside the cover
};
SyzygyData syzygy_data(const Representation& m, bool minimal = true);
Representation syzygy(const Representation& m);
Representation cosyzygy(const Representation& m);
// Omega^k for k >= 0, cosyzygies for k < 0.
Representation syzygy_power(const Representation& m, int k);

struct ProjectivePresentation {
  Morphism d1;   // P1 -> P0
  Morphism eps;  // P0 -> M
  bool minimal = true;
};
ProjectivePresentation minimal_presentation(const Representation& m);

struct Resolution {
  Representation module;
  std::vector<Representation> terms;  // P_0, P_1, ...
  std::vector<Morphism> differentials;  // differentials[i-1] : P_i -> P_{i-1}
  Morphism augmentation;                // P_0 -> M
  bool complete = false;                // the last computed syzygy was zero
  bool minimal = true;
};
// Computes P_0 .. P_steps (fewer if a syzygy vanishes).
Resolution projective_resolution(const Representation& m, std::size_t steps, bool minimal = true);
bool check_resolution(const Resolution& r);

// Exact value, proven infinite, or "at least cap" when the search was cut off.
struct Dimension {
  std::optional<std::size_t> value;
  bool infinite = false;
  std::size_t cap = kDefaultDimensionCap;
  bool finite() const { return value.has_value(); }
  bool capped() const { return !value && !infinite; }
  std::string to_string() const;
};
// Infinite when an indecomposable summand recurs among its own syzygies.
Dimension proj_dim(const Representation& m, std::size_t cap = kDefaultDimensionCap, std::uint64_t seed = 0);
Dimension global_dim(const AlgebraPtr& alg, std::size_t cap = kDefaultDimensionCap, std::uint64_t seed = 0);

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i, bool minimal = true);
// dim Ext^i(M, N) for i = 0..max_i from the given resolution (needs max_i + 1 terms).
std::vector<std::size_t> ext_dims(const Resolution& r, const Representation& n, std::size_t max_i);

// Ext^1(Y, Z) = Hom(Omega Y, Z) / restrictions of Hom(P0, Z).
struct ExtOne {
  SyzygyData syz;
  HomSpace cocycles;       // Hom(Omega Y, Z)
  SplitBasis split;        // coboundaries in cocycle coordinates
  std::size_t dim() const { return split.quotient_dim(); }
  // Representative cocycle of the k-th basis class.
  Morphism representative(std::size_t k) const;
  Morphism cocycle(const Matrix& class_coords) const;
  Matrix class_of(const Morphism& phi) const;
};
ExtOne ext_one(const Representation& y, const Representation& z);

struct ShortExact {
  Morphism f;  // Z -> E
  Morphism g;  // E -> Y
};
// Pushout of the cover sequence 0 -> Omega Y -> P0 -> Y -> 0 along phi.
ShortExact extension_from_cocycle(const SyzygyData& syz, const Morphism& phi);
// Class in Ext^1(Y, Z) of a short exact sequence 0 -> Z -> E -> Y -> 0.
Matrix extension_class(const ExtOne& ext, const ShortExact& s);
bool is_exact(const ShortExact& s);
bool splits(const ShortExact& s);

bool is_projective(const Representation& m);
bool is_injective(const Representation& m);

// Hom_A(M, A) as a left module over the opposite algebra.
HomModule hom_to_regular(const Representation& m);
Representation nakayama(const Representation& m);
Representation transpose(const Representation& m);
Representation tau(const Representation& m);
Representation tau_inverse(const Representation& m);

}  // namespace tiltkit
