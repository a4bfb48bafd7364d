#include "primegen/primality.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace primegen {
namespace {

void require_in_range(std::uint64_t m) {
    if (m > kMaxMagnitude)
        throw std::range_error("primality: " + std::to_string(m) + " exceeds 2^63 - 1");
}

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// n odd, n > base. d * 2^s = n - 1 with d odd.
bool strong_probable_prime(std::uint64_t n, std::uint64_t base, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t m) {
    require_in_range(m);
    if (m < 2) return false;
    for (std::uint64_t p : kBases) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    // Every remaining m is odd and greater than 37, so each base is a valid witness.
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t base : kBases)
        if (!strong_probable_prime(m, base, d, s)) return false;
    return true;
}

PrimalityVerdict trial_division_oracle(std::uint64_t m) {
    require_in_range(m);
    PrimalityVerdict verdict{m, false, std::nullopt};
    if (m < 2) return verdict;
    for (std::uint64_t d = 2; d <= m / d; ++d) {
        if (m % d == 0) {
            verdict.witness = d;
            return verdict;
        }
    }
    verdict.is_prime = true;
    return verdict;
}

std::uint64_t smallest_prime_factor(std::uint64_t m) {
    require_in_range(m);
    if (m < 2) throw std::domain_error("smallest_prime_factor: no prime factor of " + std::to_string(m));
    if (m % 2 == 0) return 2;
    if (is_prime(m)) return m;
    for (std::uint64_t d = 3; d <= m / d; d += 2)
        if (m % d == 0) return d;
    return m;  // unreachable for composite m
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit, std::uint64_t ceiling) {
    if (limit > ceiling)
        throw std::range_error("primes_up_to: limit " + std::to_string(limit) +
                               " exceeds ceiling " + std::to_string(ceiling));
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;

    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit / i; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

std::vector<std::uint64_t> twin_prime_lower_members(std::uint64_t limit, std::uint64_t ceiling) {
    std::vector<std::uint64_t> lower;
    if (limit <= 3) return lower;
    // The largest candidate is limit - 1, whose partner is limit + 1.
    const auto primes = primes_up_to(limit + 1, ceiling + 1);
    for (std::size_t i = 0; i + 1 < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (p >= limit) break;
        if (p > 2 && primes[i + 1] == p + 2) lower.push_back(p);
    }
    return lower;
}

}  // namespace primegen
