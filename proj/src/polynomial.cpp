#include "tiltkit/polynomial.hpp"

#include <algorithm>

#include "tiltkit/error.hpp"

namespace tiltkit::poly {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int degree(const Poly& f) { return static_cast<int>(trim(f).size()) - 1; }

Poly mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

Poly rem(const Poly& a, const Poly& m, std::int64_t p) {
  Poly r = trim(a);
  Poly mm = trim(m);
  if (mm.empty()) throw std::domain_error("polynomial division by zero");
  std::int64_t lead_inv = mod_inverse(mm.back(), p);
  while (r.size() >= mm.size()) {
    std::int64_t f = (r.back() * lead_inv) % p;
    std::size_t shift = r.size() - mm.size();
    for (std::size_t i = 0; i < mm.size(); ++i) r[shift + i] = ((r[shift + i] - f * mm[i]) % p + p) % p;
    r = trim(r);
  }
  return r;
}

Poly make_monic(Poly f, std::int64_t p) {
  f = trim(f);
  if (f.empty()) return f;
  std::int64_t inv = mod_inverse(f.back(), p);
  for (auto& c : f) c = (c * inv) % p;
  return f;
}

Poly gcd(Poly a, Poly b, std::int64_t p) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m, std::int64_t p) {
  Poly result = rem(Poly{1}, m, p);
  Poly b = rem(base, m, p);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, b, p), m, p);
    b = rem(mul(b, b, p), m, p);
    e >>= 1;
  }
  return result;
}

std::int64_t eval(const Poly& f, std::int64_t x, std::int64_t p) {
  std::int64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

namespace {

// f is monic, squarefree and a product of distinct linear factors.
void split_linear(const Poly& f, std::int64_t p, std::mt19937_64& rng, std::vector<std::int64_t>& out) {
  int d = degree(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back((p - f[0]) % p);
    return;
  }
  if (p <= 3) {
    for (std::int64_t x = 0; x < p; ++x)
      if (eval(f, x, p) == 0) out.push_back(x);
    return;
  }
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    Poly shifted{dist(rng), 1};
    Poly h = powmod(shifted, static_cast<std::uint64_t>((p - 1) / 2), f, p);
    if (h.empty()) h = {0};
    h[0] = (h[0] - 1 + p) % p;
    Poly g = gcd(f, h, p);
    int dg = degree(g);
    if (dg > 0 && dg < d) {
      split_linear(g, p, rng, out);
      Poly quotient(d - dg + 1, 0);
      Poly r = f;
      while (degree(r) >= dg) {
        std::size_t shift = r.size() - g.size();
        std::int64_t c = r.back();
        quotient[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] = ((r[shift + i] - c * g[i]) % p + p) % p;
        r = trim(r);
      }
      split_linear(trim(quotient), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::int64_t> roots(const Poly& f, std::int64_t p, std::mt19937_64& rng) {
  Poly g = make_monic(f, p);
  if (degree(g) <= 0) return {};
  Poly xp = powmod(Poly{0, 1}, static_cast<std::uint64_t>(p), g, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = (xp[1] - 1 + p) % p;
  Poly lin = gcd(g, trim(xp), p);
  std::vector<std::int64_t> out;
  split_linear(lin, p, rng, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly minimal_polynomial(const Matrix& a) {
  if (!a.field().is_prime()) throw FieldError("minimal_polynomial: prime field required");
  const auto p = static_cast<std::int64_t>(a.field().characteristic());
  const std::size_t n = a.rows();
  std::vector<Matrix> powers{Matrix::identity(a.field(), n).vec()};
  Matrix cur = Matrix::identity(a.field(), n);
  for (std::size_t k = 1; k <= n; ++k) {
    cur = cur * a;
    Matrix v = cur.vec();
    Matrix span = Matrix::hstack(a.field(), n * n, powers);
    if (auto c = span.solve(v)) {
      Poly f(k + 1, 0);
      for (std::size_t i = 0; i < k; ++i) f[i] = (p - c->at(i, 0).residue()) % p;
      f[k] = 1;
      return trim(f);
    }
    powers.push_back(std::move(v));
  }
  throw InvariantError("minimal polynomial degree exceeds dimension");
}

Matrix evaluate(const Poly& f, const Matrix& a) {
  Matrix acc(a.field(), a.rows(), a.cols());
  Matrix id = Matrix::identity(a.field(), a.rows());
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * a;
    acc.add_scaled(id, Scalar(a.field(), static_cast<long>(*it)));
  }
  return acc;
}

}  // namespace tiltkit::poly
