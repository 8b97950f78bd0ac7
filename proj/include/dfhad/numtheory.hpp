#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace dfhad {

__extension__ typedef unsigned __int128 u128;

/// Deterministic Miller-Rabin over the first thirteen prime bases; exact for
/// every n below 3317044064679887385961981 (so for all 64-bit inputs).
bool is_prime(std::uint64_t n);
bool is_prime(u128 n);

/// Largest n accepted by is_prime(u128) with a proven answer.
inline constexpr u128 kDeterministicPrimeLimit =
    static_cast<u128>(3317044064679ULL) * static_cast<u128>(1000000000000ULL) + static_cast<u128>(887385961981ULL);

/// q = p^e with p prime, or nullopt.
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t q);

/// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace dfhad
