#include "qs/rng.hpp"

namespace qs {

std::uint64_t derive_seed(std::uint64_t base, std::string_view label) {
  std::uint64_t h = 14695981039346656037ull ^ base;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= base >> 32;
  h *= 1099511628211ull;
  return h;
}

}  // namespace qs
