#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "tiltkit/field.hpp"
#include "tiltkit/matrix.hpp"

namespace tiltkit::detail {

struct ModOps {
  using T = std::int64_t;
  std::int64_t p;
  static std::vector<T>& data(Matrix& m) { return m.mod_data(); }
  static const std::vector<T>& data(const Matrix& m) { return m.mod_data(); }
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(T a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  T mul(T a, T b) const { return (a * b) % p; }
  T inv(T a) const { return mod_inverse(a, p); }
  // a - f * b
  T sub_mul(T a, T f, T b) const { return (a + (p - f) * b) % p; }
};

struct RatOps {
  using T = mpq_class;
  static std::vector<T>& data(Matrix& m) { return m.rat_data(); }
  static const std::vector<T>& data(const Matrix& m) { return m.rat_data(); }
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const { return 1 / a; }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
};

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_prime()) return fn(ModOps{static_cast<std::int64_t>(f.characteristic())});
  return fn(RatOps{});
}

}  // namespace tiltkit::detail
