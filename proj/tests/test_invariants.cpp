#include "catch_amalgamated.hpp"
#include "support.hpp"
#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/invariants.hpp"
#include "tiltkit/tilting.hpp"

using namespace tiltkit;
using namespace testing_support;

TEST_CASE("invariants of the fixtures", "[invariants]") {
  AlgebraInvariants e = invariants(fixture_algebra("example1", kGf));
  CHECK(e.dim == 4);
  CHECK(e.simples == 1);
  CHECK(e.cartan_det == 4);
  CHECK(e.gl_dim.infinite);
  CHECK(e.arrows == 2);
  AlgebraInvariants s = invariants(fixture_algebra("star3", kGf));
  CHECK(s.simples == 3);
  CHECK(s.cartan_det == 1);
  CHECK(s.gl_dim.value == 1u);
  CHECK(s.arrows == 2);
  AlgebraInvariants r = invariants(fixture_algebra("serial3", kGf));
  CHECK(r.gl_dim.value == 2u);
  CHECK(r.arrows == 2);
}

TEST_CASE("Ext^1 quiver recovers the arrows of a quiver algebra", "[invariants][oracle]") {
  for (const auto& name : fixture_names()) {
    QuiverPresentation p = fixture_presentation(name, kGf);
    AlgebraInvariants inv = invariants(build_algebra(kGf, p));
    CHECK(inv.arrows == p.quiver.arrows.size());
  }
}

TEST_CASE("example1 endomorphism algebras", "[invariants]") {
  Example1Data d = example1_data(kGf);
  AlgebraInvariants ny = invariants(end_algebra({d.n, d.y}, "End(N+Y)").algebra);
  AlgebraInvariants nx = invariants(end_algebra({d.n, d.x}, "End(N+X)").algebra);
  CHECK(ny.dim == 7);
  CHECK(nx.dim == 19);
  CHECK(ny.gl_dim.value == 2u);
  CHECK(nx.gl_dim.value == 3u);
  CHECK(ny.cartan_det == 1);
  CHECK(nx.cartan_det == 1);
  CHECK(ny.arrows == 3);
  CHECK(nx.arrows == 6);
  Comparison c = compare(ny, nx, 1);
  CHECK(c.ok());
  CHECK(c.gl_gap == 1u);
  Comparison tight = compare(ny, nx, 0);
  CHECK_FALSE(tight.ok());
  CHECK_FALSE(tight.gap_ok);
}

TEST_CASE("rational field gives the same example1 invariants", "[invariants]") {
  Example1Data d = example1_data(Field::rational());
  AlgebraInvariants ny = invariants(end_algebra({d.n, d.y}, "End(N+Y)").algebra);
  AlgebraInvariants nx = invariants(end_algebra({d.n, d.x}, "End(N+X)").algebra);
  CHECK(ny.dim == 7);
  CHECK(nx.dim == 19);
  CHECK(ny.gl_dim.value == 2u);
  CHECK(nx.gl_dim.value == 3u);
}

TEST_CASE("compare treats two non-finite global dimensions as matching", "[invariants]") {
  AlgebraInvariants a, b;
  a.simples = b.simples = 2;
  a.cartan_det = b.cartan_det = 3;
  a.gl_dim.infinite = true;
  CHECK(compare(a, b, 1).ok());
  b.gl_dim.value = 2;
  CHECK_FALSE(compare(a, b, 1).ok());
  b.cartan_det = 4;
  CHECK(compare(a, b, 5).mismatches.size() == 2);
  CHECK(compare(a, b, 5).notes.size() == 1);
}

TEST_CASE("derived invariants agree on every verified certificate", "[invariants][property]") {
  std::vector<SequenceData> seqs{example1_data(kGf).sequence,
                                 builtin_ar_sequence(fixture_algebra("star3", kGf), "I1"),
                                 builtin_ar_sequence(fixture_algebra("a2", kGf), "S1")};
  AlgebraPtr a3 = fixture_algebra("a3", kGf);
  SequenceData first = builtin_ar_sequence(a3, "S1");
  seqs.push_back(splice_chain({first, ar_sequence(first.x())}).chain);
  for (std::string name : {"star3", "a3", "serial3"}) {
    AlgebraPtr a = fixture_algebra(name, kGf);
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      Representation y = injective_module(a, v);
      if (!is_projective(y)) seqs.push_back(ar_sequence(y));
    }
  }
  for (const auto& s : seqs) {
    TiltingCertificate c = build_tilting(s);
    verify_tilting(c);
    REQUIRE(c.verdict);
    std::vector<Representation> w = s.target;
    w.push_back(s.y());
    AlgebraInvariants iw = invariants(end_algebra(distinct_indecomposables(w), "End(W)").algebra);
    AlgebraInvariants il = invariants(c.lambda.algebra);
    Comparison cmp = compare(iw, il, c.n);
    CHECK(cmp.simples_equal);
    CHECK(cmp.det_equal);
    CHECK(cmp.gap_ok);
  }
}

TEST_CASE("stable endomorphism algebras", "[invariants]") {
  AlgebraPtr s3 = fixture_algebra("star3", kGf);
  CHECK(stable_end(injective_module(s3, 0)).dim() == 1);
  AlgebraPtr a = fixture_algebra("example1", kGf);
  // Omega is a stable auto-equivalence over a self-injective algebra
  std::size_t y = stable_end(builtin_module(a, "Y")).dim();
  CHECK(y == 1);
  CHECK(stable_end(builtin_module(a, "N")).dim() == y);
  CHECK(stable_end(builtin_module(a, "X")).dim() == y);
  StableEndAlgebra m = stable_end(direct_sum_module(a, {Representation::regular(a), builtin_module(a, "N")}));
  CHECK(m.dim() == stable_end(builtin_module(a, "N")).dim());
  CHECK(stable_end(Representation::regular(a)).dim() == 0);
  CHECK_FALSE(stable_end(Representation::regular(a)).quotient);
}
