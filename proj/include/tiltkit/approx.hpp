#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiltkit/homological.hpp"
#include "tiltkit/representation.hpp"

namespace tiltkit {

enum class SequenceKind { almost_dsplit, chain };

// X -> M_n -> ... -> M_1 -> Y with maps f, t_n, ..., t_2, g and the modules
// whose additive closure is the approximation target.
struct SequenceData {
  SequenceKind kind = SequenceKind::almost_dsplit;
  std::vector<Representation> terms;
  std::vector<Morphism> maps;
  std::vector<Representation> target;

  std::size_t n() const { return maps.size() - 1; }
  const Representation& x() const { return terms.front(); }
  const Representation& y() const { return terms.back(); }
  const Morphism& f() const { return maps.front(); }
  const Morphism& g() const { return maps.back(); }
  // M: the direct sum of the target modules.
  Representation target_module() const;
  // Throws InputError unless the maps compose along the terms.
  void check_chain() const;
};

struct Clause {
  std::string name;
  bool ok = false;
  std::string detail;
  std::optional<Morphism> witness;
};

struct VerificationReport {
  std::vector<Clause> clauses;
  bool ok() const;
  const Clause* find(const std::string& name) const;
  std::vector<std::string> failing() const;
  void add(std::string name, bool ok, std::string detail = "", std::optional<Morphism> witness = {});
};

// Built from a Hom basis: source m^r with r = dim Hom(m, y).
Morphism right_approximation(const Representation& y, const Representation& m);
// Target m^r with r = dim Hom(x, m).
Morphism left_approximation(const Representation& x, const Representation& m);
bool is_right_approximation(const Morphism& g, const Representation& m);
bool is_left_approximation(const Morphism& f, const Representation& m);

// Right minimal: no nonzero summand of the source is killed by g.
bool is_right_minimal(const Morphism& g);
bool is_left_minimal(const Morphism& f);
// Restricts g to the complement of a summand in its kernel until right minimal.
Morphism minimize_right(const Morphism& g, std::uint64_t seed = 0);
Morphism minimize_left(const Morphism& f, std::uint64_t seed = 0);

VerificationReport verify_almost_dsplit(const SequenceData& s);
// Approximation conditions and exactness of the two induced Hom sequences for
// V = M (+) X and W = M (+) Y.
VerificationReport verify_lemma_conditions(const SequenceData& s);

// AR sequence ending at an indecomposable non-projective y; target = middle term.
SequenceData ar_sequence(const Representation& y, std::uint64_t seed = 0);
ShortExact as_short_exact(const SequenceData& s);

struct SpliceResult {
  SequenceData chain;
  VerificationReport report;
};
// Sequences listed from the Y end: list[0] ends at X_0, list[i] ends where list[i-1] starts.
SpliceResult splice_chain(const std::vector<SequenceData>& list, std::uint64_t seed = 0);

// Isomorphism of two-term sequences: (alpha, beta, gamma) invertible with commuting squares.
struct SequenceIso {
  Morphism alpha, beta, gamma;
};
std::optional<SequenceIso> sequence_isomorphism(const SequenceData& a, const SequenceData& b, std::uint64_t seed = 0);

// Indecomposable summands of X and of Y outside add(M), counted with multiplicity.
std::pair<std::size_t, std::size_t> summand_counts(const SequenceData& s, std::uint64_t seed = 0);

}  // namespace tiltkit
