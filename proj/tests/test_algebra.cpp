#include "catch_amalgamated.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/fixtures.hpp"
#include "tiltkit/representation.hpp"

using namespace tiltkit;

namespace {

const Field gf = Field::prime(kDefaultPrime);

// Paths of an acyclic quiver from s to t, counted by depth-first search.
std::size_t count_paths(const Quiver& q, const std::string& s, const std::string& t) {
  std::size_t n = s == t ? 1 : 0;
  for (const auto& a : q.arrows)
    if (a.from == s) n += count_paths(q, a.to, t);
  return n;
}

}  // namespace

TEST_CASE("fixture dimensions", "[algebra]") {
  CHECK(fixture_algebra("example1", gf)->dim() == 4);
  CHECK(fixture_algebra("star3", gf)->dim() == 5);
  CHECK(fixture_algebra("a2", gf)->dim() == 3);
  CHECK(fixture_algebra("a3", gf)->dim() == 6);
  CHECK(fixture_algebra("serial3", gf)->dim() == 5);
  CHECK_THROWS_AS(fixture_algebra("nope", gf), InputError);
}

TEST_CASE("example1 algebra", "[algebra]") {
  AlgebraPtr a = fixture_algebra("example1", gf);
  CHECK(a->radical().cols() == 3);
  CHECK(cartan_matrix(*a) == std::vector<std::vector<long>>{{4}});
  CHECK(integer_determinant(cartan_matrix(*a)) == 4);
  CHECK(a->check_associative());
  CHECK(a->check_unit());
  CHECK(a->vertex_count() == 1);
  // commutative: xy = yx
  auto x = a->label_index("x"), y = a->label_index("y");
  REQUIRE(x);
  REQUIRE(y);
  CHECK(a->product(a->unit_vector(*x), a->unit_vector(*y)) == a->product(a->unit_vector(*y), a->unit_vector(*x)));
  CHECK(a->product(a->unit_vector(*x), a->unit_vector(*x)).is_zero());
}

TEST_CASE("Cartan matrices of hereditary fixtures count paths", "[algebra][oracle]") {
  for (const std::string name : {"a2", "a3", "star3"}) {
    QuiverPresentation p = fixture_presentation(name, gf);
    AlgebraPtr a = build_algebra(gf, p);
    auto c = cartan_matrix(*a);
    const auto& vs = p.quiver.vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j)
        CHECK(c[i][j] == static_cast<long>(count_paths(p.quiver, vs[i], vs[j])));
    CHECK(integer_determinant(c) == 1);
  }
}

TEST_CASE("serial3 relation kills the length-two path", "[algebra]") {
  AlgebraPtr a = fixture_algebra("serial3", gf);
  auto c = cartan_matrix(*a);
  CHECK(c[0][2] == 0);
  CHECK(c[0][1] == 1);
  CHECK(c[1][2] == 1);
}

TEST_CASE("Peirce decomposition and vertex classes", "[algebra]") {
  AlgebraPtr a = fixture_algebra("a3", gf);
  std::size_t total = 0;
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t s = 0; s < 3; ++s) total += a->peirce(t, s).cols();
  CHECK(total == a->dim());
  CHECK(a->class_representatives().size() == 3);
  for (std::size_t v = 0; v < 3; ++v) CHECK(a->residue_dim(v) == 1);
}

TEST_CASE("non-admissible relations hit the closure cap", "[algebra]") {
  QuiverPresentation p;
  p.name = "loop";
  p.quiver.vertices = {"1"};
  p.quiver.arrows = {{"x", "1", "1"}};
  CHECK_THROWS_AS(build_algebra(gf, p, 8), CapExceeded);
}

TEST_CASE("a one-vertex quiver without arrows is the ground field", "[algebra]") {
  QuiverPresentation p;
  p.name = "point";
  p.quiver.vertices = {"1"};
  AlgebraPtr a = build_algebra(gf, p);
  CHECK(a->dim() == 1);
  CHECK(a->radical().cols() == 0);
}

TEST_CASE("a field smaller than the algebra is rejected", "[algebra]") {
  CHECK_THROWS_AS(fixture_algebra("example1", Field::prime(3)), FieldError);
}

TEST_CASE("relations must use known arrows", "[algebra]") {
  QuiverPresentation p = fixture_presentation("a2", gf);
  p.relations = {{{Scalar(gf, 1), {"a", "zz"}}}};
  CHECK_THROWS_AS(build_algebra(gf, p), InputError);
}

TEST_CASE("opposite and trivial extension", "[algebra]") {
  AlgebraPtr a = fixture_algebra("star3", gf);
  AlgebraPtr op = opposite(a);
  CHECK(op->dim() == a->dim());
  CHECK(opposite(op) == a);
  CHECK(op->check_associative());
  auto ca = cartan_matrix(*a), co = cartan_matrix(*op);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(ca[i][j] == co[j][i]);
  AlgebraPtr te = trivial_extension(a);
  CHECK(te->dim() == 2 * a->dim());
  CHECK(te->check_associative());
  CHECK(te->check_unit());
}

TEST_CASE("quotient by the radical square", "[algebra]") {
  AlgebraPtr a = fixture_algebra("example1", gf);
  auto xy = a->label_index("xy");
  REQUIRE(xy);
  AlgebraPtr b = quotient_algebra(a, a->unit_vector(*xy), "example1/soc");
  CHECK(b->dim() == 3);
  CHECK(b->check_associative());
  CHECK(b->radical().cols() == 2);
}

TEST_CASE("rational and prime fields give the same structure", "[algebra]") {
  for (const auto& name : fixture_names()) {
    AlgebraPtr p = fixture_algebra(name, gf), r = fixture_algebra(name, Field::rational());
    CHECK(p->dim() == r->dim());
    CHECK(cartan_matrix(*p) == cartan_matrix(*r));
  }
}
