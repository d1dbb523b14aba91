#include "tiltkit/field.hpp"

#include <charconv>
#include <string>

#include "tiltkit/error.hpp"

namespace tiltkit {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 31)) throw InputError("prime fields are limited to p < 2^31");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  if (text.starts_with("gf:")) text.remove_prefix(3);
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("cannot parse field '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "gf:" + std::to_string(p_);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  if (nr == 0) throw std::domain_error("inverse of zero");
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return t < 0 ? t + p : t;
}

namespace {
std::int64_t reduce(long v, std::uint64_t p) {
  long long m = static_cast<long long>(v % static_cast<long long>(p));
  return m < 0 ? m + static_cast<long long>(p) : m;
}
}  // namespace

Scalar::Scalar(const Field& f, long v) : field_(f) {
  if (f.is_prime())
    r_ = reduce(v, f.characteristic());
  else
    q_ = v;
}

Scalar::Scalar(const Field& f, const mpq_class& q) : field_(f) {
  if (f.is_rational()) {
    q_ = q;
    return;
  }
  mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw InputError("denominator vanishes modulo " + std::to_string(f.characteristic()));
  std::int64_t n = num.get_si(), d = den.get_si();
  auto pp = static_cast<std::int64_t>(f.characteristic());
  r_ = static_cast<std::int64_t>((static_cast<unsigned __int128>(n) * mod_inverse(d, pp)) % pp);
}

Scalar Scalar::parse(const Field& f, std::string_view text) {
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw InputError("cannot parse scalar '" + std::string(text) + "'");
  q.canonicalize();
  return Scalar(f, q);
}

bool Scalar::is_zero() const { return field_.is_prime() ? r_ == 0 : q_ == 0; }
bool Scalar::is_one() const { return field_.is_prime() ? r_ == 1 : q_ == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s(field_);
  if (field_.is_prime())
    s.r_ = (r_ + o.r_) % static_cast<std::int64_t>(field_.characteristic());
  else
    s.q_ = q_ + o.q_;
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_prime())
    s.r_ = r_ == 0 ? 0 : static_cast<std::int64_t>(field_.characteristic()) - r_;
  else
    s.q_ = -q_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s(field_);
  if (field_.is_prime())
    s.r_ = (r_ * o.r_) % static_cast<std::int64_t>(field_.characteristic());
  else
    s.q_ = q_ * o.q_;
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  Scalar s(field_);
  if (field_.is_prime()) {
    auto p = static_cast<std::int64_t>(field_.characteristic());
    s.r_ = (r_ * mod_inverse(o.r_, p)) % p;
  } else {
    s.q_ = q_ / o.q_;
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_prime() ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace tiltkit
