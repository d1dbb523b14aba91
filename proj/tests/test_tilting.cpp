#include "catch_amalgamated.hpp"
#include "support.hpp"
#include "tiltkit/decompose.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/tilting.hpp"

using namespace tiltkit;
using namespace testing_support;

namespace {

std::vector<std::pair<std::string, SequenceData>> bundled_sequences() {
  std::vector<std::pair<std::string, SequenceData>> out;
  out.emplace_back("example1", example1_data(kGf).sequence);
  out.emplace_back("star3", builtin_ar_sequence(fixture_algebra("star3", kGf), "I1"));
  out.emplace_back("a2", builtin_ar_sequence(fixture_algebra("a2", kGf), "S1"));
  AlgebraPtr a3 = fixture_algebra("a3", kGf);
  SequenceData first = builtin_ar_sequence(a3, "S1");
  out.emplace_back("a3-chain", splice_chain({first, ar_sequence(first.x())}).chain);
  return out;
}

}  // namespace

TEST_CASE("tilting certificates of the bundled sequences", "[tilting]") {
  for (auto& [name, s] : bundled_sequences()) {
    INFO(name);
    TiltingCertificate c = build_tilting(s);
    verify_tilting(c);
    CHECK(c.verdict);
    CHECK(c.star_exact);
    REQUIRE(c.checks);
    REQUIRE(c.checks->pd.finite());
    CHECK(*c.checks->pd.value <= c.n);
    for (auto e : c.checks->ext) CHECK(e == 0);
    CHECK(c.checks->report.ok());
    // Independent check of self-orthogonality on the computed T
    for (std::size_t i = 1; i <= c.n; ++i) CHECK(ext_dim(c.module(), c.module(), i) == 0);
    EndoIso iso = endo_of_tilting(c);
    CHECK(iso.ok());
    std::vector<Representation> w = s.target;
    w.push_back(s.y());
    CHECK(iso.end_t.dim() == hom_dim(direct_sum_module(s.y().algebra(), w), direct_sum_module(s.y().algebra(), w)));
    CHECK(iso.end_t.dim() == iso.end_w.dim());
    CHECK(iso.cartan_match);
  }
}

TEST_CASE("example1 certificate numbers", "[tilting]") {
  Example1Data d = example1_data(kGf);
  TiltingCertificate c = build_tilting(d.sequence);
  verify_tilting(c);
  CHECK(c.lambda.algebra->dim() == 19);
  CHECK(c.module().dim() == 13);
  CHECK(c.n == 1);
  EndoIso iso = endo_of_tilting(c);
  CHECK(iso.end_t.dim() == 7);
  CHECK(iso.e_dim == 19);
  CHECK(iso.i_dim == 12);
  // T has as many pairwise non-isomorphic summands as Lambda has simples
  Decomposition dt = decompose(c.module());
  CHECK(dt.representatives.size() == c.lambda.algebra->class_representatives().size());
}

TEST_CASE("build_tilting rejects sequences failing the conditions", "[tilting][negative]") {
  CHECK_THROWS_AS(build_tilting(a2_broken_sequence(kGf)), InputError);
}

TEST_CASE("pd and Ext checks reject non-tilting modules", "[tilting][negative]") {
  AlgebraPtr a = fixture_algebra("a2", kGf);
  // Ext^1(S1, S2) != 0
  TiltingChecks t = check_pd_ext(direct_sum_module(a, {simple_module(a, 0), simple_module(a, 1)}), 1);
  CHECK_FALSE(t.report.ok());
  CHECK_FALSE(t.report.find("ext-vanishing")->ok);
  AlgebraPtr s3 = fixture_algebra("serial3", kGf);
  TiltingChecks u = check_pd_ext(simple_module(s3, 0), 1);
  CHECK_FALSE(u.report.find("pd<=n")->ok);
}

TEST_CASE("BB recognition", "[tilting][bb]") {
  auto seqs = bundled_sequences();
  for (std::size_t i = 0; i < 3; ++i) {
    INFO(seqs[i].first);
    TiltingCertificate c = build_tilting(seqs[i].second);
    verify_tilting(c);
    BBTiltingSpec spec = bb_recognize(c);
    CHECK(spec.ok());
    REQUIRE(spec.simple);
    CHECK(is_simple(*spec.simple));
    if (seqs[i].first == "star3") CHECK(spec.apr);
    if (seqs[i].first == "example1") CHECK_FALSE(spec.apr);
  }
}

TEST_CASE("n-BB construction on star3 reproduces the certificate", "[tilting][bb]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  TiltingCertificate c = build_tilting(builtin_ar_sequence(a, "I1"));
  verify_tilting(c);
  BBTiltingSpec nb = n_bb_construct(vertex_projective(a, 0).module, 1);
  CHECK(nb.ok());
  REQUIRE(nb.tilting);
  Representation t = restrict_to_base(c.lambda, c.module());
  CHECK(is_isomorphic(t, *nb.tilting).holds());
  // APR tilting module: tau^-1 P1 (+) P2 (+) P3
  Representation expected = direct_sum_module(
      a, {injective_module(a, 0), vertex_projective(a, 1).module, vertex_projective(a, 2).module});
  CHECK(is_isomorphic(*nb.tilting, expected).holds());
  // the alternative characterization is recorded and agrees here
  CHECK(nb.alternative.clauses.size() == 3);
  CHECK(nb.alternative.ok());
}

TEST_CASE("n-BB construction over serial3", "[tilting][bb]") {
  AlgebraPtr a = fixture_algebra("serial3", kGf);
  BBTiltingSpec nb = n_bb_construct(simple_module(a, 2), 2);
  CHECK(nb.ok());
  REQUIRE(nb.tilting);
  TiltingChecks t = check_pd_ext(*nb.tilting, 2);
  CHECK(t.report.ok());
  CHECK_THROWS_AS(n_bb_construct(simple_module(a, 0), 1), InputError);
  CHECK_THROWS_AS(n_bb_construct(vertex_projective(a, 0).module, 1), InputError);
}

TEST_CASE("Cartan comparison up to permutation", "[tilting]") {
  CHECK(equal_up_to_permutation({{1, 2}, {0, 1}}, {{1, 0}, {2, 1}}));
  CHECK_FALSE(equal_up_to_permutation({{1, 2}, {0, 1}}, {{1, 1}, {0, 1}}));
}
