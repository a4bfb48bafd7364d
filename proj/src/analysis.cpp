#include "primegen/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "primegen/checked.hpp"
#include "primegen/primality.hpp"

namespace primegen {
namespace {

bool magnitude_is_prime(std::uint64_t magnitude) {
    return magnitude <= kMaxMagnitude && is_prime(magnitude);
}

FirstFailure make_failure(std::int64_t n, std::uint64_t magnitude) {
    FirstFailure failure{n, magnitude, std::nullopt};
    if (magnitude >= 2) failure.factor = smallest_prime_factor(magnitude);
    return failure;
}

// n ordered by |n| with negatives first: 0, -1, 1, -2, 2, ...
bool outward_before(std::int64_t lhs, std::int64_t rhs) {
    const auto abs_l = checked::magnitude(lhs);
    const auto abs_r = checked::magnitude(rhs);
    if (abs_l != abs_r) return abs_l < abs_r;
    return lhs < rhs;
}

std::vector<std::uint64_t> seeds_below(std::int64_t limit) {
    if (limit < 3)
        throw std::invalid_argument("limit must be at least 3 (got " + std::to_string(limit) + ")");
    return twin_prime_lower_members(static_cast<std::uint64_t>(limit));
}

}  // namespace

EvaluationRecord evaluate_record(const TwinPrimeSeed& seed, std::int64_t n) {
    EvaluationRecord record;
    record.p = seed.p();
    record.n = n;
    record.raw = evaluate_family(seed, n);
    record.magnitude = checked::magnitude(record.raw);
    record.is_prime = magnitude_is_prime(record.magnitude);
    return record;
}

FamilyRunReport verify_family(const TwinPrimeSeed& seed) {
    FamilyRunReport report;
    report.p = seed.p();
    report.range = admissible_range(seed);
    report.records.reserve(static_cast<std::size_t>(report.range.count));

    std::set<std::uint64_t> primes;
    for (std::int64_t n = report.range.n_min; n <= report.range.n_max; ++n) {
        const EvaluationRecord record = evaluate_record(seed, n);
        report.records.push_back(record);
        if (record.is_prime) {
            primes.insert(record.magnitude);
            continue;
        }
        report.all_prime = false;
        if (!report.first_failure || outward_before(n, report.first_failure->n))
            report.first_failure = make_failure(n, record.magnitude);
    }
    report.distinct_primes.assign(primes.begin(), primes.end());
    return report;
}

AggregateReport verify_all(std::int64_t limit) {
    AggregateReport aggregate;
    std::set<std::uint64_t> primes;
    for (std::uint64_t p : seeds_below(limit)) {
        FamilyRunReport report = verify_family(TwinPrimeSeed::make(static_cast<std::int64_t>(p)));
        aggregate.seeds.push_back(report.p);
        aggregate.total_evaluations += report.range.count;
        aggregate.total_all_prime = aggregate.total_all_prime && report.all_prime;
        primes.insert(report.distinct_primes.begin(), report.distinct_primes.end());
        aggregate.reports.push_back(std::move(report));
    }
    aggregate.overall_distinct_primes.assign(primes.begin(), primes.end());
    return aggregate;
}

std::int64_t run_length(const QuadraticPolynomial& poly, std::int64_t start, std::int64_t cap) {
    std::int64_t k = 0;
    while (k < cap) {
        const std::int64_t value = evaluate_quadratic(poly, checked::add(start, k));
        if (!magnitude_is_prime(checked::magnitude(value))) break;
        ++k;
    }
    return k;
}

std::vector<PrimeMultiplicity> multiplicity_table(const FamilyRunReport& report) {
    std::map<std::uint64_t, std::size_t> counts;
    for (const auto& record : report.records)
        if (record.is_prime) ++counts[record.magnitude];

    std::vector<PrimeMultiplicity> table;
    table.reserve(counts.size());
    for (const auto& [prime, count] : counts) table.push_back({prime, count});
    std::stable_sort(table.begin(), table.end(),
                     [](const PrimeMultiplicity& l, const PrimeMultiplicity& r) {
                         return l.count > r.count;
                     });
    return table;
}

std::vector<SeedScanEntry> scan_seeds(std::int64_t limit, std::uint64_t ceiling) {
    if (limit >= 0 && static_cast<std::uint64_t>(limit) > ceiling)
        throw std::range_error("scan limit " + std::to_string(limit) + " exceeds ceiling " +
                               std::to_string(ceiling));
    std::vector<SeedScanEntry> entries;
    for (std::uint64_t p : seeds_below(limit)) {
        const auto seed = TwinPrimeSeed::make(static_cast<std::int64_t>(p));
        const AdmissibleRange range = admissible_range(seed);
        SeedScanEntry entry{seed.p(), range.count, true, std::nullopt};

        // n_min <= 0 <= n_max always, and |n_min| < n_max for p >= 3.
        auto check = [&](std::int64_t n) {
            const EvaluationRecord record = evaluate_record(seed, n);
            if (record.is_prime) return false;
            entry.all_prime = false;
            entry.first_failure = make_failure(n, record.magnitude);
            return true;
        };
        for (std::int64_t d = 0; d <= range.n_max; ++d) {
            if (d > 0 && range.contains(-d) && check(-d)) break;
            if (check(d)) break;
        }
        entries.push_back(entry);
    }
    return entries;
}

}  // namespace primegen
