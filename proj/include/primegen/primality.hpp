#pragma once

/**
 * @file primality.hpp
 * @brief Exact primality and prime enumeration for 64-bit magnitudes.
 *
 * is_prime() is a deterministic Miller-Rabin test over the first twelve
 * prime bases, which has no pseudoprimes below 3.3e24 and therefore gives
 * exact answers over the whole supported range [0, 2^63 - 1].
 * trial_division_oracle() is the slow independent cross-check.
 */

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace primegen {

/// Largest magnitude accepted by the primality routines.
inline constexpr std::uint64_t kMaxMagnitude =
    static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());

/// Default upper bound for primes_up_to().
inline constexpr std::uint64_t kDefaultSieveCeiling = 100'000'000;

struct PrimalityVerdict {
    std::uint64_t value = 0;
    bool is_prime = false;
    // Smallest prime factor; set iff value is composite.
    std::optional<std::uint64_t> witness;
};

/// Throws std::range_error if m > kMaxMagnitude.
bool is_prime(std::uint64_t m);

/// Divides by every d with d*d <= m. Throws std::range_error if m > kMaxMagnitude.
PrimalityVerdict trial_division_oracle(std::uint64_t m);

/// Smallest prime factor of m >= 2 (m itself when prime).
/// Throws std::domain_error for m < 2, std::range_error above kMaxMagnitude.
std::uint64_t smallest_prime_factor(std::uint64_t m);

/// Primes p <= limit in ascending order (sieve of Eratosthenes).
/// Throws std::range_error if limit > ceiling.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit,
                                        std::uint64_t ceiling = kDefaultSieveCeiling);

/// Every p < limit with p >= 3 and both p, p + 2 prime, ascending.
std::vector<std::uint64_t> twin_prime_lower_members(std::uint64_t limit,
                                                    std::uint64_t ceiling = kDefaultSieveCeiling);

}  // namespace primegen
