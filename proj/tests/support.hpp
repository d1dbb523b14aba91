#pragma once

// Random modules and brute-force oracles shared by the tests.

#include <random>
#include <string>
#include <vector>

#include "tiltkit/fixtures.hpp"
#include "tiltkit/representation.hpp"

namespace testing_support {

using namespace tiltkit;

inline const Field kGf = Field::prime(kDefaultPrime);

// dim Hom(M, N) as the solution space of N(b) F = F M(b) over every basis
// element b, independent of the generator-based solver.
inline std::size_t brute_hom_dim(const Representation& m, const Representation& n) {
  const Field& f = m.field();
  const AlgebraPtr& alg = m.algebra();
  std::size_t unknowns = m.dim() * n.dim();
  if (unknowns == 0) return 0;
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < alg->dim(); ++i) {
    Matrix lhs = Matrix::kron(Matrix::identity(f, m.dim()), n.basis_action(i));
    Matrix rhs = Matrix::kron(m.basis_action(i).transpose(), Matrix::identity(f, n.dim()));
    blocks.push_back(lhs - rhs);
  }
  Matrix eq = Matrix::vstack(f, unknowns, blocks);
  return unknowns - eq.rank();
}

// Checks the module axioms element by element: b_i b_j acts as the product.
inline bool brute_is_module(const Representation& m) {
  const AlgebraPtr& alg = m.algebra();
  for (std::size_t i = 0; i < alg->dim(); ++i)
    for (std::size_t j = 0; j < alg->dim(); ++j)
      if (!(m.basis_action(i) * m.basis_action(j) == m.action(alg->product(alg->unit_vector(i), alg->unit_vector(j)))))
        return false;
  return m.action(alg->one()).is_identity();
}

// Same module in a random basis.
inline Representation conjugate(const Representation& m, std::mt19937_64& rng) {
  const Field& f = m.field();
  Matrix p = Matrix::random(f, m.dim(), m.dim(), rng);
  while (!p.is_invertible()) p = Matrix::random(f, m.dim(), m.dim(), rng);
  Matrix pi = *p.inverse();
  std::vector<Matrix> gens;
  for (const auto& g : m.gen_actions()) gens.push_back(pi * g * p);
  return Representation(m.algebra(), m.dim(), gens, m.label());
}

// Random representation of a quiver algebra with the given vertex dims. Only
// the relation of serial3 (a then b is zero) is handled.
inline Representation random_quiver_module(const AlgebraPtr& alg, const std::vector<std::size_t>& dims,
                                           std::mt19937_64& rng) {
  const Field& f = alg->field();
  const Quiver& q = alg->presentation()->quiver;
  std::map<std::string, std::size_t> d;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) d[q.vertices[v]] = dims[v];
  std::map<std::string, Matrix> arrows;
  for (const auto& a : q.arrows)
    arrows[a.name] = Matrix::random(f, d[a.to], d[a.from], rng);
  if (alg->name() == "serial3" && arrows.count("a") && arrows.count("b") && d["2"] > 0) {
    // b must vanish on the image of a: b = R K^T with K^T a = 0.
    Matrix k = arrows["a"].transpose().kernel();
    arrows["b"] = k.cols() && d["3"] ? Matrix::random(f, d["3"], k.cols(), rng) * k.transpose() : Matrix(f, d["3"], d["2"]);
  }
  return Representation::from_quiver(alg, d, arrows, "random");
}

// Random quotient of A^k for k = 1 or 2 by the submodule generated by random vectors.
inline Representation random_cyclic_quotient(const AlgebraPtr& alg, std::size_t max_dim, std::mt19937_64& rng) {
  const Field& f = alg->field();
  Representation reg = Representation::regular(alg);
  for (;;) {
    std::size_t k = 1 + rng() % 2;
    std::vector<Representation> parts(k, reg);
    Representation free = direct_sum_module(alg, parts);
    std::size_t gens = rng() % 3;
    Matrix vecs = Matrix::random(f, free.dim(), std::max<std::size_t>(gens, 1), rng);
    // Push generators into the radical part sometimes, for smaller submodules.
    if (rng() % 2) vecs = free.act(alg->radical().column(rng() % alg->radical().cols()), vecs);
    Matrix sub = gens ? generated_submodule(free, vecs).inclusion.matrix() : Matrix(f, free.dim(), 0);
    Quotient qm = quotient(free, sub);
    if (qm.module.dim() > 0 && qm.module.dim() <= max_dim) return qm.module.with_label("random");
  }
}

// Module pairs of dimension at most 6 over a2, a3, star3, serial3 and example1.
inline std::vector<std::pair<Representation, Representation>> oracle_corpus(std::size_t count, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::vector<AlgebraPtr> algs;
  for (const std::string name : {"a2", "a3", "star3", "serial3", "example1"}) algs.push_back(fixture_algebra(name, kGf));
  auto random_module = [&](const AlgebraPtr& a) {
    if (a->name() == "example1") return random_cyclic_quotient(a, 6, rng);
    for (;;) {
      std::vector<std::size_t> dims(a->vertex_count());
      for (auto& d : dims) d = rng() % 3;
      std::size_t total = 0;
      for (auto d : dims) total += d;
      if (total > 0 && total <= 6) return random_quiver_module(a, dims, rng);
    }
  };
  std::vector<std::pair<Representation, Representation>> out;
  for (std::size_t i = 0; i < count; ++i) {
    const AlgebraPtr& a = algs[i % algs.size()];
    Representation m = random_module(a);
    Representation n = random_module(a);
    out.emplace_back(conjugate(m, rng), conjugate(n, rng));
  }
  return out;
}

}  // namespace testing_support
