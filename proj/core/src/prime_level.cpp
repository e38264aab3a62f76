#include "pgog/prime_level.hpp"

#include <cstdlib>
#include <string>

#include "pgog/error.hpp"

namespace pgog {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_power(std::uint32_t p, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    r *= p;
    if (r > kMaxPrimePower) {
      throw Error("p^n = " + std::to_string(p) + "^" + std::to_string(e) +
                  " exceeds the desk-scale bound 2^20");
    }
  }
  return r;
}

PrimeLevel::PrimeLevel(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw Error("level n must be at least 1");
  size_ = static_cast<std::uint32_t>(checked_power(p, n));
}

std::size_t size_guard() {
  if (char const* env = std::getenv("PGOG_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t{1} << 20;
}

}  // namespace pgog
