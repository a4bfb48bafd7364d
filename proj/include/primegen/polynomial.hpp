#pragma once

/**
 * @file polynomial.hpp
 * @brief The twin-prime family (1 + 2n)(p - 2n) + 2 and exact integer quadratics.
 *
 * All evaluation is exact signed 64-bit arithmetic; results that do not fit
 * raise std::overflow_error. Values keep their sign here.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primegen {

/// Raised when a seed fails its twin-prime preconditions.
class SeedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A lower twin-prime member p > 2. Odd by construction, so (p - 1) / 2 is exact.
class TwinPrimeSeed {
public:
    /// Validates p > 2, p prime and p + 2 prime. Throws SeedError naming the failed check.
    static TwinPrimeSeed make(std::int64_t p);

    std::int64_t p() const noexcept { return p_; }

    friend bool operator==(const TwinPrimeSeed&, const TwinPrimeSeed&) = default;

private:
    explicit TwinPrimeSeed(std::int64_t p) noexcept : p_(p) {}
    std::int64_t p_;
};

/// a*n^2 + b*n + c with exact signed coefficients.
struct QuadraticPolynomial {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    friend bool operator==(const QuadraticPolynomial&, const QuadraticPolynomial&) = default;
};

inline constexpr QuadraticPolynomial kEulerPolynomial{1, 1, 41};

/// Closed integer bounds of the open interval ((1 - p)/2, p - 1).
struct AdmissibleRange {
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;
    std::int64_t count = 0;

    bool contains(std::int64_t n) const noexcept { return n >= n_min && n <= n_max; }

    friend bool operator==(const AdmissibleRange&, const AdmissibleRange&) = default;
};

/// (1 + 2n)(p - 2n) + 2, signed.
std::int64_t evaluate_family(const TwinPrimeSeed& seed, std::int64_t n);

/// (-4, 2(p - 1), p + 2).
QuadraticPolynomial expanded_family(const TwinPrimeSeed& seed);

AdmissibleRange admissible_range(const TwinPrimeSeed& seed);

std::int64_t evaluate_quadratic(const QuadraticPolynomial& poly, std::int64_t n);

/// q with q(n) = poly(x - n), i.e. (a, -2ax - b, ax^2 + bx + c).
QuadraticPolynomial reflect(const QuadraticPolynomial& poly, std::int64_t x);

/// q with q(n) = poly(n - x); the translate used for (n - 40)^2 + (n - 40) + 41.
QuadraticPolynomial shift(const QuadraticPolynomial& poly, std::int64_t x);

/// p(2p - 5): the shared magnitude of the family at n = (1 - p)/2 and n = p - 1.
std::int64_t endpoint_magnitude(const TwinPrimeSeed& seed);

/// The n' = (p - 1)/2 - n that the family maps to the same value as n.
std::int64_t mirror_index(const TwinPrimeSeed& seed, std::int64_t n);

/// Human-readable form, e.g. "n^2 + n + 41" or "-4n^2 + 56n + 31".
std::string to_string(const QuadraticPolynomial& poly);

}  // namespace primegen
