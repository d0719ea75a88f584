#pragma once

#include <cstdint>
#include <vector>

namespace orbitcodes {

/// Largest field or group size handled. Discrete-log tables are dense, so
/// everything above this is refused up front.
inline constexpr std::uint64_t kDeskScaleCap = std::uint64_t{1} << 24;

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// base^exp, or 0 if the result would exceed `limit`.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t limit = UINT64_MAX);

/// If value == base^d for some d >= 0 returns d, otherwise -1.
int exact_log(std::uint64_t base, std::uint64_t value);

/// Möbius function, used for the necklace count of irreducibles.
int moebius(std::uint64_t n);

}  // namespace orbitcodes
