#include <numeric>

#include "catch_amalgamated.hpp"
#include "tiltkit/error.hpp"
#include "tiltkit/kernels.hpp"
#include "tiltkit/matrix.hpp"
#include "tiltkit/polynomial.hpp"

using namespace tiltkit;

namespace {

const Field gf = Field::prime(kDefaultPrime);
const Field q = Field::rational();

// Leibniz expansion, used as an independent determinant oracle.
Scalar leibniz(const Matrix& a) {
  std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total(a.field(), 0);
  do {
    Scalar term(a.field(), 1);
    for (std::size_t i = 0; i < n; ++i) term = term * a.at(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Matrix random_rank(const Field& f, std::size_t rows, std::size_t cols, std::size_t rank, std::mt19937_64& rng) {
  return Matrix::random(f, rows, rank, rng) * Matrix::random(f, rank, cols, rng);
}

}  // namespace

TEST_CASE("scalar arithmetic", "[linalg]") {
  Scalar a(gf, 3), b(gf, 5);
  CHECK((a / b * b) == a);
  CHECK((a - a).is_zero());
  CHECK(Scalar(gf, -1).residue() == 10006);
  CHECK(mod_inverse(3, 7) == 5);
  Scalar x = Scalar::parse(q, "-3/4");
  CHECK(x.to_string() == "-3/4");
  CHECK((x * Scalar(q, 4)).to_string() == "-3");
  CHECK(Scalar::parse(gf, "1/2").residue() == 5004);
  CHECK_THROWS_AS(Scalar(gf, 1) / Scalar(gf, 0), std::domain_error);
}

TEST_CASE("field parsing", "[linalg]") {
  CHECK(Field::parse("rational").is_rational());
  CHECK(Field::parse("gf:101").characteristic() == 101);
  CHECK(Field::parse("7").characteristic() == 7);
  CHECK_THROWS_AS(Field::parse("gf:100"), InputError);
  CHECK(is_prime_number(10007));
  CHECK_FALSE(is_prime_number(10005));
}

TEST_CASE("kernel, rank and solve are consistent", "[linalg][property]") {
  auto rng = make_rng(11);
  for (const Field& f : {gf, q}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7, k = rng() % (std::min(r, c) + 1);
      Matrix a = random_rank(f, r, c, k, rng);
      Matrix ker = a.kernel();
      CHECK(a.rank() == k);
      CHECK(ker.cols() + a.rank() == c);
      if (ker.cols()) CHECK((a * ker).is_zero());
      CHECK(a.column_space().cols() == k);
      Matrix x = Matrix::random(f, c, 2, rng);
      auto sol = a.solve(a * x);
      REQUIRE(sol);
      CHECK(a * *sol == a * x);
    }
  }
}

TEST_CASE("determinant matches the Leibniz expansion", "[linalg][oracle]") {
  auto rng = make_rng(5);
  for (const Field& f : {gf, q})
    for (int trial = 0; trial < 10; ++trial) {
      std::size_t n = 1 + rng() % 5;
      Matrix a = Matrix::random(f, n, n, rng);
      CHECK(a.determinant() == leibniz(a));
    }
  Matrix s = Matrix::from_ints(q, 3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2});
  CHECK(s.determinant().to_string() == "6");
}

TEST_CASE("inverse and identity", "[linalg]") {
  auto rng = make_rng(3);
  for (const Field& f : {gf, q}) {
    Matrix a = Matrix::random(f, 5, 5, rng);
    auto inv = a.inverse();
    REQUIRE(inv);
    CHECK((a * *inv).is_identity());
    CHECK((*inv * a).is_identity());
  }
  Matrix sing = Matrix::from_ints(q, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(sing.inverse());
}

TEST_CASE("vec and Kronecker product", "[linalg]") {
  auto rng = make_rng(8);
  Matrix a = Matrix::random(gf, 3, 2, rng), x = Matrix::random(gf, 2, 4, rng), b = Matrix::random(gf, 4, 3, rng);
  CHECK((a * x * b).vec() == Matrix::kron(b.transpose(), a) * x.vec());
  CHECK(Matrix::unvec(x.vec(), 2, 4) == x);
}

TEST_CASE("column and split bases", "[linalg]") {
  auto rng = make_rng(4);
  Matrix span = random_rank(gf, 6, 5, 3, rng);
  ColumnBasis cb(gf, 6, span);
  CHECK(cb.dim() == 3);
  auto c = cb.coords(span);
  REQUIRE(c);
  CHECK(cb.basis() * *c == span);
  CHECK_FALSE(cb.contains(Matrix::random(gf, 6, 1, rng)));
  CHECK(cb.complement_units().size() == 3);
  SplitBasis sb(gf, 6, span);
  CHECK(sb.sub_dim() == 3);
  CHECK(sb.quotient_dim() == 3);
  CHECK(sb.quotient_coords(span).is_zero());
}

TEST_CASE("serial and parallel kernels agree", "[linalg][kernels]") {
  auto rng = make_rng(21);
  set_thread_count(4);
  for (const Field& f : {gf, q}) {
    for (int trial = 0; trial < 6; ++trial) {
      std::size_t r = 20 + rng() % 60, c = 20 + rng() % 60, k = rng() % 20 + 1;
      Matrix a = random_rank(f, r, c, k, rng);
      Matrix b = Matrix::random(f, c, 30, rng);
      CHECK(kernels::multiply_serial(a, b) == kernels::multiply_parallel(a, b));
      auto s = kernels::rref_serial(a), p = kernels::rref_parallel(a);
      CHECK(s.pivots == p.pivots);
      CHECK(s.reduced == p.reduced);
      CHECK(s.pivots.size() == k);
    }
  }
  set_kernel_mode(KernelMode::parallel);
  Matrix a = Matrix::random(gf, 90, 90, rng);
  std::size_t rp = a.rank();
  set_kernel_mode(KernelMode::serial);
  CHECK(a.rank() == rp);
  set_kernel_mode(KernelMode::automatic);
}

TEST_CASE("minimal polynomial and roots", "[linalg][poly]") {
  auto rng = make_rng(2);
  Matrix d = Matrix::from_ints(gf, 3, 3, {2, 0, 0, 0, 2, 0, 0, 0, 5});
  poly::Poly mp = poly::minimal_polynomial(d);
  CHECK(poly::degree(mp) == 2);
  CHECK(poly::evaluate(mp, d).is_zero());
  CHECK(poly::roots(mp, kDefaultPrime, rng) == std::vector<std::int64_t>{2, 5});
  Matrix a = Matrix::random(gf, 6, 6, rng);
  CHECK(poly::evaluate(poly::minimal_polynomial(a), a).is_zero());
}
