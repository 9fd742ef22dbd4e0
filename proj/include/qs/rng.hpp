#ifndef QS_RNG_HPP
#define QS_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "qs/field.hpp"

namespace qs {

// Seeded deterministic stream. mt19937_64 output is pinned by the standard;
// bounded draws use rejection sampling so results are identical on every
// platform (uniform_int_distribution is implementation-defined and avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  long long int_in(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1) != 0; }

  // QQ: integer in [-box, box]; GF(p): uniform residue.
  Scalar scalar(const Field& f, long long box = 50) {
    if (f.is_rational()) return Scalar::of_int(f, int_in(-box, box));
    return Scalar::residue(below(f.modulus), f.modulus);
  }

  Scalar nonzero_scalar(const Field& f, long long box = 50) {
    for (;;) {
      Scalar s = scalar(f, box);
      if (!s.is_zero()) return s;
    }
  }

 private:
  std::mt19937_64 eng_;
};

// Stable seed derivation for named sub-streams (FNV-1a mix).
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

}  // namespace qs

#endif
