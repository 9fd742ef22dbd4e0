#include "qs/field.hpp"

#include <stdexcept>

namespace qs {

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p >= (1ull << 31))
    throw std::invalid_argument("prime field modulus must satisfy 3 <= p < 2^31");
  if (!is_prime_u64(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field{FieldKind::PrimeField, p};
}

std::string Field::describe() const {
  return is_rational() ? "QQ" : "GF(" + std::to_string(modulus) + ")";
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // p < 2^31 so the product fits in 64 bits
}

std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("inverse of zero residue");
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("residue not invertible");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  // Tonelli-Shanks with the first deterministic non-residue.
  std::uint64_t q = p - 1, s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  std::uint64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = pow_mod(c, 1ull << (m - i - 1), p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

namespace {

std::uint64_t mulmod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_wide(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_wide(r, a, m);
    a = mulmod_wide(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1, s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_wide(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (std::uint64_t i = 1; i < s; ++i) {
      x = mulmod_wide(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long long v) {
  Scalar s;
  s.field_ = f;
  if (f.is_rational()) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = static_cast<long long>(f.modulus);
    long long r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.field_ = Field::rationals();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
  Scalar s;
  s.field_ = Field::prime(p);
  s.r_ = r % p;
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return rational(std::move(q));
  }
  // integer literal, possibly negative, reduced mod p
  mpz_class z;
  if (z.set_str(text, 10) != 0)
    throw std::invalid_argument("bad residue literal: " + text);
  mpz_class m(static_cast<unsigned long>(f.modulus));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return residue(r.get_ui(), f.modulus);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_.get_num() == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw std::invalid_argument("scalar field mismatch: " + field_.describe() + " vs " +
                                o.field_.describe());
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = neg_mod(r_, field_.modulus);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ + o.q_;
  else
    s.r_ = add_mod(r_, o.r_, field_.modulus);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ - o.q_;
  else
    s.r_ = sub_mod(r_, o.r_, field_.modulus);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = q_ * o.q_;
  else
    s.r_ = mul_mod(r_, o.r_, field_.modulus);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = inv_mod(r_, field_.modulus);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rat() const {
  if (!field_.is_rational()) throw std::logic_error("rat() on prime-field scalar");
  return q_;
}

std::uint64_t Scalar::res() const {
  if (!field_.is_prime_field()) throw std::logic_error("res() on rational scalar");
  return r_;
}

Scalar Scalar::to_prime_field(std::uint64_t p) const {
  if (field_.is_prime_field()) {
    if (field_.modulus != p) throw std::invalid_argument("residue already in another prime field");
    return *this;
  }
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class num = q_.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q_.get_den() % m;
  if (den == 0)
    throw std::domain_error("denominator vanishes mod " + std::to_string(p));
  std::uint64_t n = num.get_ui();
  std::uint64_t d = den.get_ui();
  return residue(mul_mod(n, inv_mod(d, p), p), p);
}

Scalar Scalar::to_field(const Field& f) const {
  if (field_ == f) return *this;
  if (f.is_prime_field() && field_.is_rational()) return to_prime_field(f.modulus);
  throw std::invalid_argument("no conversion " + field_.describe() + " -> " + f.describe());
}

std::size_t Scalar::bit_size() const {
  if (!field_.is_rational()) return 0;
  return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace qs
