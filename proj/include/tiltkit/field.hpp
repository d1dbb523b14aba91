#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tiltkit {

// Either GF(p) for a prime p < 2^31, or the rationals.
class Field {
 public:
  static Field rational() { return Field(0); }
  static Field prime(std::uint64_t p);
  // Accepts "rational", "gf:P" or "P".
  static Field parse(std::string_view text);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultPrime = 10007;

bool is_prime_number(std::uint64_t n);

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

class Scalar {
 public:
  explicit Scalar(const Field& f) : field_(f) {}
  Scalar(const Field& f, long v);
  Scalar(const Field& f, const mpq_class& q);
  // "a/b", "a" or a residue.
  static Scalar parse(const Field& f, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::int64_t residue() const { return r_; }
  const mpq_class& rational() const { return q_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

  std::string to_string() const;

 private:
  friend class Matrix;
  Field field_;
  std::int64_t r_ = 0;
  mpq_class q_;
};

}  // namespace tiltkit
