#include "catch_amalgamated.hpp"
#include "support.hpp"
#include "tiltkit/approx.hpp"
#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/error.hpp"

using namespace tiltkit;
using namespace testing_support;

namespace {

// 0 -> P1 -> P2 (+) P3 -> I1 -> 0 over star3, built by hand.
SequenceData star3_expected(const AlgebraPtr& a) {
  Representation p1 = vertex_projective(a, 0).module, p2 = vertex_projective(a, 1).module,
                 p3 = vertex_projective(a, 2).module, i1 = injective_module(a, 0);
  DirectSum mid = direct_sum(a, {p2, p3});
  Morphism f2 = hom_space(p1, p2).element(0), f3 = hom_space(p1, p3).element(0);
  Morphism f = f2.then(mid.inclusions[0]) + f3.then(mid.inclusions[1]);
  Quotient c = cokernel(f);
  auto iso = is_isomorphic(c.module, i1);
  SequenceData s;
  s.terms = {p1, mid.module, i1};
  s.maps = {f, c.projection.then(*iso.witness)};
  s.target = {mid.module};
  return s;
}

}  // namespace

TEST_CASE("right and left approximations", "[approx]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  Representation i1 = injective_module(a, 0);
  Representation m = direct_sum_module(a, {vertex_projective(a, 1).module, vertex_projective(a, 2).module});
  Morphism g = right_approximation(i1, m);
  CHECK(is_right_approximation(g, m));
  CHECK(g.is_surjective());
  Morphism gm = minimize_right(g, 3);
  CHECK(is_right_minimal(gm));
  CHECK(is_right_approximation(gm, m));
  CHECK(gm.source().dim() == 4);
  Representation p1 = vertex_projective(a, 0).module;
  Morphism f = left_approximation(p1, m);
  CHECK(is_left_approximation(f, m));
  Morphism fm = minimize_left(f, 3);
  CHECK(is_left_minimal(fm));
  CHECK(fm.target().dim() == 4);
  // a zero map is no approximation once Hom(M, Y) is nonzero
  CHECK_FALSE(is_right_approximation(Morphism::zero(m, i1), m));
}

TEST_CASE("minimization strips summands killed by g", "[approx][property]") {
  auto rng = make_rng(61);
  AlgebraPtr a = fixture_algebra("a3", kGf);
  Representation y = injective_module(a, 2);
  for (int t = 0; t < 4; ++t) {
    Representation m = random_quiver_module(a, {rng() % 2, 1 + rng() % 2, rng() % 2}, rng);
    Morphism g = right_approximation(y, m);
    Morphism gm = minimize_right(g, t);
    CHECK(is_right_minimal(gm));
    CHECK(is_right_approximation(gm, m));
    CHECK(gm.source().dim() <= g.source().dim());
    // minimal approximations are unique up to isomorphism
    Morphism gm2 = minimize_right(right_approximation(y, direct_sum_module(a, {m, m})), t + 7);
    CHECK(is_isomorphic(gm.source(), gm2.source()).holds());
  }
}

TEST_CASE("AR sequence over star3 matches the hand-built one", "[approx]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  SequenceData s = builtin_ar_sequence(a, "I1");
  SequenceData e = star3_expected(a);
  CHECK(is_isomorphic(s.terms[0], e.terms[0]).holds());
  CHECK(is_isomorphic(s.terms[1], e.terms[1]).holds());
  auto iso = sequence_isomorphism(s, e);
  REQUIRE(iso);
  CHECK(iso->alpha.then(e.f()).matrix() == s.f().then(iso->beta).matrix());
  CHECK(iso->beta.then(e.g()).matrix() == s.g().then(iso->gamma).matrix());
  CHECK(verify_almost_dsplit(s).ok());
  CHECK_FALSE(splits(as_short_exact(s)));
}

TEST_CASE("AR sequence over example1", "[approx]") {
  Example1Data d = example1_data(kGf);
  CHECK(d.x.dim() == 5);
  CHECK(is_isomorphic(d.sequence.terms[1], direct_sum_module(d.algebra, {d.n, d.n})).holds());
  CHECK_FALSE(splits(as_short_exact(d.sequence)));
  VerificationReport r = verify_almost_dsplit(d.sequence);
  CHECK(r.ok());
  CHECK(r.clauses.size() == 5);
  CHECK(verify_lemma_conditions(d.sequence).ok());
  auto [xo, yo] = summand_counts(d.sequence);
  CHECK(xo == 1);
  CHECK(yo == 1);
}

TEST_CASE("AR sequences never split", "[approx][property]") {
  for (const std::string name : {"a3", "star3", "serial3", "example1"}) {
    AlgebraPtr a = fixture_algebra(name, kGf);
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      for (Representation y : {simple_module(a, v), injective_module(a, v)}) {
        if (is_projective(y) || !is_split_local(y)) continue;
        SequenceData s = ar_sequence(y);
        CHECK_FALSE(splits(as_short_exact(s)));
        CHECK(is_exact(as_short_exact(s)));
        CHECK(is_isomorphic(s.x(), tau(y)).holds());
        CHECK(verify_almost_dsplit(s).ok());
      }
    }
  }
}

TEST_CASE("ar_sequence rejects projective and decomposable modules", "[approx]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  CHECK_THROWS_AS(ar_sequence(vertex_projective(a, 0).module), InputError);
  CHECK_THROWS_AS(ar_sequence(direct_sum_module(a, {injective_module(a, 0), simple_module(a, 1)})), InputError);
}

TEST_CASE("negative control: g not a right approximation", "[approx][negative]") {
  SequenceData s = a2_broken_sequence(kGf);
  VerificationReport r = verify_almost_dsplit(s);
  CHECK_FALSE(r.ok());
  CHECK(r.failing() == std::vector<std::string>{"right-approximation"});
  const Clause* c = r.find("right-approximation");
  REQUIRE(c);
  CHECK(c->witness);
}

TEST_CASE("negative control: broken maps", "[approx][negative]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  SequenceData s = builtin_ar_sequence(a, "I1");
  s.maps[1] = Morphism::zero(s.terms[1], s.terms[2]);
  VerificationReport r = verify_almost_dsplit(s);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("cokernel")->ok);
  SequenceData bad = builtin_ar_sequence(a, "I1");
  bad.maps[0] = bad.maps[0].scaled(Scalar(kGf, 0)) + Morphism(bad.terms[0], bad.terms[1], Matrix(kGf, 4, 1));
  CHECK_FALSE(verify_almost_dsplit(bad).find("kernel")->ok);
}

TEST_CASE("splicing AR sequences over a3", "[approx]") {
  AlgebraPtr a = fixture_algebra("a3", kGf);
  SequenceData first = builtin_ar_sequence(a, "S1");
  SequenceData second = ar_sequence(first.x());
  SpliceResult r = splice_chain({first, second});
  CHECK(r.report.ok());
  CHECK(r.chain.n() == 2);
  CHECK(r.chain.kind == SequenceKind::chain);
  CHECK(verify_lemma_conditions(r.chain).ok());
  CHECK(is_isomorphic(r.chain.y(), simple_module(a, 0)).holds());
  CHECK(is_isomorphic(r.chain.x(), tau(tau(simple_module(a, 0)))).holds());
  CHECK_THROWS_AS(splice_chain({first, first}), InputError);
}
