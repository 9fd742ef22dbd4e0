#ifndef QS_FIELD_HPP
#define QS_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace qs {

enum class FieldKind { Rationals, PrimeField };

// A coefficient field: QQ or GF(p) for an odd prime p < 2^31.
// All scalars taking part in one computation share one Field value.
struct Field {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;  // set iff kind == PrimeField

  static Field rationals() { return Field{FieldKind::Rationals, 0}; }
  static Field prime(std::uint64_t p);  // validates primality and range

  bool is_rational() const { return kind == FieldKind::Rationals; }
  bool is_prime_field() const { return kind == FieldKind::PrimeField; }
  std::string describe() const;  // "QQ" or "GF(p)"

  friend bool operator==(const Field&, const Field&) = default;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Default primes of the reproducibility policy: one large prime for rank
// work, one small prime for root-scanning workloads, plus fixed alternates
// for the multi-prime cross-check.
inline constexpr std::uint64_t kRankPrime = 2147483647ull;     // 2^31 - 1
inline constexpr std::uint64_t kRankPrimeAlt = 2147483629ull;
inline constexpr std::uint64_t kScanPrime = 32003ull;
inline constexpr std::uint64_t kScanPrimeAlt = 32027ull;

// Modular arithmetic on residues in [0, p), p < 2^31.
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);  // throws on a == 0
// Square root in GF(p) (Tonelli-Shanks); nullopt when a is a non-residue.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

// An exact field element: a reduced fraction (QQ) or a residue in [0, p).
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}  // zero of QQ

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long v);
  static Scalar rational(mpq_class q);  // canonicalizes
  static Scalar residue(std::uint64_t r, std::uint64_t p);
  // Parses "num", "num/den" (QQ) or a decimal residue (GF(p)).
  static Scalar parse(const std::string& s, const Field& f);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;  // throws on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Exact access; the variant not matching the field kind is invalid.
  const mpq_class& rat() const;
  std::uint64_t res() const;

  // Reduction QQ -> GF(p); throws if the denominator vanishes mod p.
  Scalar to_prime_field(std::uint64_t p) const;
  // Cross-field conversion: identity when fields match, reduction QQ->GF(p).
  Scalar to_field(const Field& f) const;

  // Bit-size heuristic used by the pivoting rule (QQ only; 0 for GF(p)).
  std::size_t bit_size() const;

  std::string str() const;

 private:
  Field field_;
  mpq_class q_;        // valid iff rationals
  std::uint64_t r_ = 0;  // valid iff prime field

  void require_same_field(const Scalar& o) const;
};

}  // namespace qs

#endif
