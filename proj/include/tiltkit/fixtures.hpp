#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiltkit/algebra.hpp"
#include "tiltkit/approx.hpp"

namespace tiltkit {

// Bundled presentations: example1 (k<x,y>/(x^2, y^2, xy - yx)), star3 (2 -> 1 <- 3),
// a2 (1 -> 2), serial3 (1 -> 2 -> 3 with ab = 0) and a3 (1 -> 2 -> 3).
std::vector<std::string> fixture_names();
bool is_fixture(const std::string& name);
QuiverPresentation fixture_presentation(const std::string& name, const Field& f);
AlgebraPtr fixture_algebra(const std::string& name, const Field& f);

// Module expressions: A, N (radical of A), S<v>, P<v>, I<v>, D(A), Y (simple at the
// first vertex), X (Omega^2 Y), and the wrappers Omega^k(e) (k may be negative), tau(e), tauinv(e).
Representation builtin_module(const AlgebraPtr& alg, const std::string& expr);

struct Example1Data {
  AlgebraPtr algebra;
  Representation y, n, x;
  SequenceData sequence;  // 0 -> X -> N (+) N -> Y -> 0 with target add(N)
};
Example1Data example1_data(const Field& f, std::uint64_t seed = 0);

// The AR sequence ending at the module expression, with target its middle term.
SequenceData builtin_ar_sequence(const AlgebraPtr& alg, const std::string& expr, std::uint64_t seed = 0);
// 0 -> S2 -> P1 -> S1 -> 0 over a2 declared against add(P1 (+) S1): g is not a right approximation.
SequenceData a2_broken_sequence(const Field& f, std::uint64_t seed = 0);

}  // namespace tiltkit
