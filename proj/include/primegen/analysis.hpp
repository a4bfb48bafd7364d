#pragma once

/**
 * @file analysis.hpp
 * @brief Exhaustive verification of the twin-prime family, aggregate counts,
 * prime multiplicities, quadratic run lengths and first-failure scans.
 *
 * A value counts as prime when its absolute value is prime; 0 and +-1 never do.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "primegen/polynomial.hpp"

namespace primegen {

inline constexpr std::int64_t kDefaultRunCap = 10'000;
inline constexpr std::uint64_t kDefaultScanCeiling = 1'000'000;

struct EvaluationRecord {
    std::int64_t p = 0;
    std::int64_t n = 0;
    std::int64_t raw = 0;
    std::uint64_t magnitude = 0;
    bool is_prime = false;

    friend bool operator==(const EvaluationRecord&, const EvaluationRecord&) = default;
};

struct FirstFailure {
    std::int64_t n = 0;
    std::uint64_t magnitude = 0;
    // Smallest prime factor; empty when magnitude is 0 or 1.
    std::optional<std::uint64_t> factor;

    friend bool operator==(const FirstFailure&, const FirstFailure&) = default;
};

struct FamilyRunReport {
    std::int64_t p = 0;
    AdmissibleRange range;
    std::vector<EvaluationRecord> records;  // n ascending
    bool all_prime = true;
    std::vector<std::uint64_t> distinct_primes;  // ascending
    // The composite record with smallest |n|, negative n first on ties.
    std::optional<FirstFailure> first_failure;
};

struct AggregateReport {
    std::vector<std::int64_t> seeds;
    std::vector<FamilyRunReport> reports;  // parallel to seeds
    std::int64_t total_evaluations = 0;
    bool total_all_prime = true;
    std::vector<std::uint64_t> overall_distinct_primes;
};

struct PrimeMultiplicity {
    std::uint64_t prime = 0;
    std::size_t count = 0;

    friend bool operator==(const PrimeMultiplicity&, const PrimeMultiplicity&) = default;
};

struct SeedScanEntry {
    std::int64_t p = 0;
    std::int64_t count = 0;
    bool all_prime = true;
    std::optional<FirstFailure> first_failure;
};

EvaluationRecord evaluate_record(const TwinPrimeSeed& seed, std::int64_t n);

FamilyRunReport verify_family(const TwinPrimeSeed& seed);

/// verify_family over every twin lower member 2 < p < limit. Throws std::invalid_argument for limit < 3.
AggregateReport verify_all(std::int64_t limit);

/// Number of consecutive arguments start, start+1, ... with |poly| prime, capped at cap.
std::int64_t run_length(const QuadraticPolynomial& poly, std::int64_t start,
                        std::int64_t cap = kDefaultRunCap);

/// Occurrences of each prime magnitude; descending by count, then ascending by prime.
std::vector<PrimeMultiplicity> multiplicity_table(const FamilyRunReport& report);

/// Searches each seed outward from n = 0 and stops at the first composite.
/// Throws std::invalid_argument for limit < 3, std::range_error above ceiling.
std::vector<SeedScanEntry> scan_seeds(std::int64_t limit,
                                      std::uint64_t ceiling = kDefaultScanCeiling);

}  // namespace primegen
