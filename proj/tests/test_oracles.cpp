#include "catch_amalgamated.hpp"
#include "support.hpp"
#include "tiltkit/homological.hpp"

using namespace tiltkit;
using namespace testing_support;

TEST_CASE("Hom dimensions match the brute-force oracle on the random corpus", "[oracle]") {
  auto corpus = oracle_corpus(25, 2024);
  REQUIRE(corpus.size() == 25);
  for (const auto& [m, n] : corpus) {
    INFO(m.algebra()->name() << " dims " << m.dim() << ", " << n.dim());
    CHECK(m.dim() <= 6);
    CHECK(n.dim() <= 6);
    CHECK(hom_dim(m, n) == brute_hom_dim(m, n));
    CHECK(hom_dim(n, m) == brute_hom_dim(n, m));
  }
}

TEST_CASE("Ext^1 from minimal and non-minimal resolutions agree on the corpus", "[oracle]") {
  for (const auto& [m, n] : oracle_corpus(25, 2024)) {
    INFO(m.algebra()->name() << " dims " << m.dim() << ", " << n.dim());
    CHECK(ext_dim(m, n, 1, true) == ext_dim(m, n, 1, false));
    CHECK(ext_dim(n, m, 1, true) == ext_dim(n, m, 1, false));
    CHECK(ext_one(m, n).dim() == ext_dim(m, n, 1));
  }
}

TEST_CASE("higher Ext agrees between resolutions", "[oracle]") {
  for (const auto& [m, n] : oracle_corpus(10, 77)) {
    Resolution a = projective_resolution(m, 3, true), b = projective_resolution(m, 3, false);
    REQUIRE(check_resolution(a));
    REQUIRE(check_resolution(b));
    CHECK(ext_dims(a, n, 2) == ext_dims(b, n, 2));
  }
}

TEST_CASE("the corpus is reproducible from its seed", "[oracle]") {
  auto a = oracle_corpus(5, 1), b = oracle_corpus(5, 1);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(a[i].first.gen_actions() == b[i].first.gen_actions());
    CHECK(a[i].second.dim() == b[i].second.dim());
  }
}
