#include "catch_amalgamated.hpp"
#include "support.hpp"
#include "tiltkit/decompose.hpp"
#include "tiltkit/endalgebra.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/homological.hpp"

using namespace tiltkit;
using namespace testing_support;

TEST_CASE("standard modules of a3", "[representation]") {
  AlgebraPtr a = fixture_algebra("a3", kGf);
  // arrows 1 -> 2 -> 3: P1 is uniserial of length 3, S3 is projective
  CHECK(vertex_projective(a, 0).module.dim() == 3);
  CHECK(vertex_projective(a, 2).module.dim() == 1);
  CHECK(injective_module(a, 0).dim() == 1);
  CHECK(injective_module(a, 2).dim() == 3);
  CHECK(is_isomorphic(vertex_projective(a, 0).module, injective_module(a, 2)).holds());
  for (std::size_t v = 0; v < 3; ++v) {
    Representation s = simple_module(a, v);
    CHECK(s.dim() == 1);
    CHECK(brute_is_module(s));
    CHECK(top(vertex_projective(a, v).module).module.dim() == 1);
    CHECK(socle(injective_module(a, v)).module.dim() == 1);
  }
}

TEST_CASE("quiver-form modules are validated", "[representation]") {
  AlgebraPtr a = fixture_algebra("serial3", kGf);
  Field f = a->field();
  std::map<std::string, std::size_t> dims{{"1", 1}, {"2", 1}, {"3", 1}};
  std::map<std::string, Matrix> ok{{"a", Matrix::from_ints(f, 1, 1, {1})}, {"b", Matrix::from_ints(f, 1, 1, {0})}};
  CHECK(Representation::from_quiver(a, dims, ok).dim() == 3);
  std::map<std::string, Matrix> bad{{"a", Matrix::from_ints(f, 1, 1, {1})}, {"b", Matrix::from_ints(f, 1, 1, {1})}};
  CHECK_THROWS_AS(Representation::from_quiver(a, dims, bad), InputError);
  std::map<std::string, Matrix> shape{{"a", Matrix::from_ints(f, 1, 2, {1, 1})}};
  CHECK_THROWS_AS(Representation::from_quiver(a, dims, shape), InputError);
}

TEST_CASE("Hom dimensions agree with the commutation oracle", "[representation][oracle]") {
  auto rng = make_rng(9);
  for (const std::string name : {"a3", "star3", "serial3"}) {
    AlgebraPtr a = fixture_algebra(name, kGf);
    for (int t = 0; t < 4; ++t) {
      Representation m = random_quiver_module(a, {rng() % 3, rng() % 3, rng() % 3}, rng);
      Representation n = random_quiver_module(a, {rng() % 3, rng() % 3, rng() % 3}, rng);
      HomSpace h = hom_space(m, n);
      CHECK(h.dim() == brute_hom_dim(m, n));
      for (std::size_t k = 0; k < h.dim(); ++k) CHECK(h.element(k).is_homomorphism());
    }
  }
}

TEST_CASE("kernels, images and cokernels", "[representation]") {
  auto rng = make_rng(17);
  AlgebraPtr a = fixture_algebra("example1", kGf);
  Representation reg = Representation::regular(a);
  Representation n = builtin_module(a, "N");
  HomSpace h = hom_space(reg, n);
  REQUIRE(h.dim() == 3);
  Morphism f = h.combination(Matrix::random(kGf, 3, 1, rng));
  Submodule k = kernel(f);
  Submodule im = image(f);
  Quotient c = cokernel(f);
  CHECK(k.module.dim() + im.module.dim() == reg.dim());
  CHECK(im.module.dim() + c.module.dim() == n.dim());
  CHECK(k.inclusion.then(f).is_zero());
  CHECK(f.then(c.projection).is_zero());
  CHECK(brute_is_module(k.module));
  CHECK(brute_is_module(c.module));
}

TEST_CASE("direct sums and lifting", "[representation]") {
  AlgebraPtr a = fixture_algebra("star3", kGf);
  std::vector<Representation> parts{simple_module(a, 0), vertex_projective(a, 1).module, injective_module(a, 0)};
  DirectSum d = direct_sum(a, parts);
  CHECK(d.module.dim() == 1 + 2 + 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(d.inclusions[i].then(d.projections[i]).matrix().is_identity());
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(d.inclusions[i].then(d.projections[j]).is_zero());
  }
  // maps from a projective lift through the cover of S2; the identity of S2 does not
  Representation p2 = vertex_projective(a, 1).module, s2 = simple_module(a, 1), s1 = simple_module(a, 0);
  Morphism cover = projective_cover(s2).cover;
  REQUIRE(hom_dim(p2, s2) == 1);
  auto lift = lift_through(cover, cover);
  REQUIRE(lift);
  CHECK(lift->then(cover).matrix() == cover.matrix());
  CHECK_FALSE(lift_through(Morphism::identity(s2), cover));
  CHECK(hom_dim(s1, s2) == 0);
}

TEST_CASE("duality is an involution up to isomorphism", "[representation][property]") {
  auto rng = make_rng(23);
  AlgebraPtr a = fixture_algebra("star3", kGf);
  for (int t = 0; t < 5; ++t) {
    Representation m = random_quiver_module(a, {1 + rng() % 2, rng() % 2, rng() % 2}, rng);
    Representation dd = rebase(dual(dual(m)), a);
    CHECK(dd.dim() == m.dim());
    CHECK(hom_dim(m, dd) == hom_dim(m, m));
    CHECK(brute_hom_dim(dual(m), dual(m)) == brute_hom_dim(m, m));
  }
  // D P(v) = injective of the opposite algebra at v
  Representation dp = dual(vertex_projective(a, 0).module);
  CHECK(is_isomorphic(dp, injective_module(opposite(a), 0)).holds());
}

TEST_CASE("decomposition recovers a known direct sum", "[representation][decompose]") {
  auto rng = make_rng(31);
  AlgebraPtr a = fixture_algebra("star3", kGf);
  Representation s1 = simple_module(a, 0), p2 = vertex_projective(a, 1).module, i1 = injective_module(a, 0);
  Representation m = conjugate(direct_sum_module(a, {p2, s1, i1, p2}), rng);
  Decomposition d = decompose(m, 5);
  REQUIRE(d.summands.size() == 4);
  CHECK(d.representatives.size() == 3);
  std::size_t total = 0;
  for (const auto& s : d.summands) {
    total += s.module.dim();
    CHECK(is_split_local(s.module));
    CHECK(s.inclusion.then(s.projection).matrix().is_identity());
  }
  CHECK(total == m.dim());
  CHECK(summands_outside_add(m, direct_sum_module(a, {p2, s1}), 5) == 1);
  CHECK(in_add(direct_sum_module(a, {p2, p2}), p2));
  CHECK_FALSE(in_add(i1, p2));
}

TEST_CASE("isomorphism detection in random bases", "[representation][decompose]") {
  auto rng = make_rng(37);
  AlgebraPtr a = fixture_algebra("example1", kGf);
  Representation n = builtin_module(a, "N"), x = builtin_module(a, "X");
  CHECK(is_isomorphic(n, conjugate(n, rng)).holds());
  CHECK(is_isomorphic(x, conjugate(x, rng)).holds());
  CHECK(is_isomorphic(dual(x), dual(conjugate(x, rng))).holds());
  CHECK(is_isomorphic(n, rebase(dual(dual(n)), a)).holds());
  CHECK_FALSE(is_isomorphic(Representation::regular(a), direct_sum_module(a, {n, simple_module(a, 0)})).holds());
}

TEST_CASE("End algebras in composition order", "[representation][endalgebra]") {
  AlgebraPtr a = fixture_algebra("example1", kGf);
  EndAlgebra e = end_algebra({Representation::regular(a)}, "End(A)");
  CHECK(e.algebra->dim() == 4);
  CHECK(e.algebra->check_associative());
  // End(A) = A when products compose left to right
  CHECK(cartan_matrix(*e.algebra) == cartan_matrix(*a));
  EndAlgebra ny = end_algebra({builtin_module(a, "N"), builtin_module(a, "Y")}, "End(N+Y)");
  CHECK(ny.algebra->dim() == 7);
  CHECK(ny.algebra->vertex_count() == 2);
  HomModule hm = hom_module(ny, builtin_module(a, "N"));
  CHECK(hm.module.dim() == hom_dim(ny.module, builtin_module(a, "N")));
  CHECK(brute_is_module(hm.module));
}
