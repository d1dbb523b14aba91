#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tiltkit/matrix.hpp"

// Univariate polynomials over GF(p), coefficients stored low degree first.
namespace tiltkit::poly {

using Poly = std::vector<std::int64_t>;

Poly trim(Poly f);
int degree(const Poly& f);
Poly mul(const Poly& a, const Poly& b, std::int64_t p);
Poly rem(const Poly& a, const Poly& m, std::int64_t p);
Poly gcd(Poly a, Poly b, std::int64_t p);
Poly make_monic(Poly f, std::int64_t p);
// x^e mod m, or base^e mod m
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::int64_t p);
std::int64_t eval(const Poly& f, std::int64_t x, std::int64_t p);

// Distinct roots of f in GF(p), sorted.
std::vector<std::int64_t> roots(const Poly& f, std::int64_t p, std::mt19937_64& rng);

// Monic minimal polynomial of a square matrix over a prime field.
Poly minimal_polynomial(const Matrix& a);
Matrix evaluate(const Poly& f, const Matrix& a);

}  // namespace tiltkit::poly
