#pragma once

#include <cstddef>
#include <cstdint>

namespace pgog {

/// Upper bound on p^n accepted anywhere in the library.
inline constexpr std::uint64_t kMaxPrimePower = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t v);

/// p^e, throwing pgog::Error once the value exceeds kMaxPrimePower.
std::uint64_t checked_power(std::uint32_t p, std::uint32_t e);

/// A prime together with a truncation level, validated on construction.
class PrimeLevel {
 public:
  PrimeLevel(std::uint32_t p, std::uint32_t n);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  /// p^n
  std::uint32_t size() const noexcept { return size_; }

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t size_;
};

/// Enumeration bound: 2^20 unless PGOG_SIZE_GUARD overrides it.
std::size_t size_guard();

}  // namespace pgog
