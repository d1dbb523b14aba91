#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tiltkit/approx.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/homological.hpp"

namespace tiltkit {

// pd, Ext vanishing up to pd, and an add(T)-coresolution of the base algebra.
struct TiltingChecks {
  Dimension pd;
  std::vector<std::size_t> ext;  // dim Ext^i(T, T), i = 1..pd
  std::vector<Representation> coresolution;
  VerificationReport report;
};

struct TiltingCertificate {
  SequenceData sequence;
  std::size_t n = 1;
  EndAlgebra lambda;  // End(V), V = distinct indecomposables of M and X
  Representation v_prime;
  DirectSum m1m;  // M_1 (+) M
  Morphism a;     // V' -> M_1 (+) M
  std::vector<HomModule> star_terms;  // Hom(V, X), ..., Hom(V, M_2), Hom(V, M_1 (+) M)
  std::vector<Morphism> star_maps;
  Quotient t;  // T as the cokernel of the last star map
  bool star_exact = false;
  std::optional<TiltingChecks> checks;
  bool verdict = false;

  const Representation& module() const { return t.module; }
};

// Requires verify_lemma_conditions(s) to pass.
TiltingCertificate build_tilting(const SequenceData& s, std::uint64_t seed = 0);
TiltingCertificate& verify_tilting(TiltingCertificate& c, std::size_t cap = kDefaultDimensionCap);

// pd(T) <= n and Ext^i(T,T) = 0 for 1 <= i <= pd, computed over the algebra of t.
TiltingChecks check_pd_ext(const Representation& t, std::size_t n, std::size_t cap = kDefaultDimensionCap);

// End_Lambda(T) -> End(W) through E/I and Ebar/Ibar, verified on structure constants.
struct EndoIso {
  HomSpace end_t;  // End_Lambda(T)
  HomSpace end_w;  // End(W), W = Y (+) M
  std::size_t e_dim = 0, i_dim = 0, ebar_dim = 0, ibar_dim = 0;
  Matrix phi;  // End_Lambda(T) coordinates -> End(W) coordinates
  std::vector<std::vector<long>> cartan_t, cartan_w;
  bool cartan_match = false;
  VerificationReport report;
  bool ok() const { return report.ok(); }
};
EndoIso endo_of_tilting(const TiltingCertificate& c, std::uint64_t seed = 0);

// Equality of square integer matrices up to a simultaneous permutation.
bool equal_up_to_permutation(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b);

struct BBTiltingSpec {
  std::optional<Representation> simple;
  std::size_t n = 1;
  std::vector<std::size_t> cond_a;  // dim Ext^j(D A, S), j = 0..n-1
  std::vector<std::size_t> cond_b;  // dim Ext^i(S, S), i = 1..n
  std::optional<Representation> translate;   // tau^-1 Omega^{-n+1} S
  std::optional<Representation> complement;  // P, or Hom(V, M) when recognized
  std::optional<Representation> tilting;
  bool apr = false;
  VerificationReport report;
  // Equivalent characterization (a') pd L <= n, (b'), (c') Ext^i(D A, S) = 0 for
  // 1 <= i <= n-1. Recorded beside the report, never used for the verdict.
  VerificationReport alternative;
  bool ok() const { return report.ok(); }
};

bool is_simple(const Representation& m, std::uint64_t seed = 0);
// Injective cogenerator D(A) as a left module.
Representation injective_cogenerator(const AlgebraPtr& alg);

BBTiltingSpec bb_recognize(const TiltingCertificate& c, std::uint64_t seed = 0);
BBTiltingSpec n_bb_construct(const Representation& s, std::size_t n, std::uint64_t seed = 0,
                             std::size_t cap = kDefaultDimensionCap);

// A Lambda-module viewed over A when V is isomorphic to the regular module,
// through End(V) = End(_A A) = A in left-to-right composition.
Representation restrict_to_base(const EndAlgebra& lam, const Representation& z, std::uint64_t seed = 0);

}  // namespace tiltkit
