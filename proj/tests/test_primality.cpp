#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "primegen/primality.hpp"

using namespace primegen;

TEST_CASE("is_prime on worked values") {
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(1373));
    CHECK_FALSE(is_prime(119));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1681));
}

TEST_CASE("is_prime near the top of the range") {
    CHECK(is_prime(9223372036854775783ULL));  // largest prime below 2^63
    CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
    CHECK_FALSE(is_prime(2147483647ULL * 2147483629ULL));
    CHECK_FALSE(is_prime(3037000493ULL * 3037000453ULL));
    CHECK_FALSE(is_prime(kMaxMagnitude));  // 2^63 - 1 = 7^2 * 73 * 127 * ...
}

TEST_CASE("is_prime rejects strong pseudoprimes") {
    CHECK_FALSE(is_prime(2047));                     // base 2
    CHECK_FALSE(is_prime(3215031751ULL));            // bases 2, 3, 5, 7
    CHECK_FALSE(is_prime(3825123056546413051ULL));   // bases 2 through 23
    CHECK_FALSE(is_prime(561));                      // Carmichael
}

TEST_CASE("magnitudes above 2^63 - 1 are a range error") {
    CHECK_THROWS_AS(is_prime(kMaxMagnitude + 1), std::range_error);
    CHECK_THROWS_AS(trial_division_oracle(kMaxMagnitude + 1), std::range_error);
    CHECK_THROWS_AS(smallest_prime_factor(kMaxMagnitude + 1), std::range_error);
}

TEST_CASE("trial_division_oracle verdicts") {
    auto v = trial_division_oracle(227);
    CHECK(v.is_prime);
    CHECK_FALSE(v.witness);

    v = trial_division_oracle(2);
    CHECK(v.is_prime);

    v = trial_division_oracle(1681);
    CHECK_FALSE(v.is_prime);
    REQUIRE(v.witness);
    CHECK(*v.witness == 41);

    v = trial_division_oracle(119);
    REQUIRE(v.witness);
    CHECK(*v.witness == 7);

    for (std::uint64_t m : {0ULL, 1ULL}) {
        v = trial_division_oracle(m);
        CHECK_FALSE(v.is_prime);
        CHECK_FALSE(v.witness);
    }
}

TEST_CASE("witness invariant: 1 < w < m and w | m") {
    for (std::uint64_t m = 0; m < 20000; ++m) {
        const auto v = trial_division_oracle(m);
        CHECK(v.value == m);
        if (v.witness) {
            CHECK(*v.witness > 1);
            CHECK(*v.witness < m);
            CHECK(m % *v.witness == 0);
            CHECK(trial_division_oracle(*v.witness).is_prime);
        } else if (m >= 2) {
            CHECK(v.is_prime);
        }
    }
}

TEST_CASE("is_prime agrees with trial division on random 40-bit values") {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::uint64_t> dist(1ULL << 30, 1ULL << 40);
    for (int i = 0; i < 2000; ++i) {
        const auto m = dist(rng);
        CHECK(is_prime(m) == trial_division_oracle(m).is_prime);
    }
}

TEST_CASE("smallest_prime_factor") {
    CHECK(smallest_prime_factor(119) == 7);
    CHECK(smallest_prime_factor(1681) == 41);
    CHECK(smallest_prime_factor(1537) == 29);
    CHECK(smallest_prime_factor(97) == 97);
    CHECK(smallest_prime_factor(1024) == 2);
    CHECK_THROWS_AS(smallest_prime_factor(1), std::domain_error);
    CHECK_THROWS_AS(smallest_prime_factor(0), std::domain_error);
}

TEST_CASE("primes_up_to") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(0).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});

    const auto to41 = primes_up_to(41);
    REQUIRE(to41.size() == 13);
    CHECK(to41[11] == 37);
    CHECK(to41.back() == 41);

    CHECK(primes_up_to(1'000'000).size() == 78498);
    CHECK_THROWS_AS(primes_up_to(101, 100), std::range_error);
    CHECK_NOTHROW(primes_up_to(100, 100));
}

TEST_CASE("sieve consistency: m listed iff m <= L and prime") {
    const std::uint64_t limit = 50'000;
    const auto primes = primes_up_to(limit);
    CHECK(std::is_sorted(primes.begin(), primes.end()));
    CHECK(std::adjacent_find(primes.begin(), primes.end()) == primes.end());
    for (std::uint64_t m = 0; m <= limit + 100; ++m) {
        const bool listed = std::binary_search(primes.begin(), primes.end(), m);
        CHECK(listed == (m <= limit && is_prime(m)));
    }
}

TEST_CASE("twin_prime_lower_members") {
    using V = std::vector<std::uint64_t>;
    CHECK(twin_prime_lower_members(41) == V{3, 5, 11, 17, 29});
    CHECK(twin_prime_lower_members(4) == V{3});
    CHECK(twin_prime_lower_members(100) == V{3, 5, 11, 17, 29, 41, 59, 71});
    CHECK(twin_prime_lower_members(3).empty());
    CHECK(twin_prime_lower_members(0).empty());
    CHECK(twin_prime_lower_members(42) == V{3, 5, 11, 17, 29, 41});
}

TEST_CASE("twin membership matches pair scan over primes_up_to(L + 2)") {
    for (std::uint64_t limit : {5ULL, 30ULL, 41ULL, 42ULL, 1000ULL, 12345ULL}) {
        const auto primes = primes_up_to(limit + 2);
        auto listed = [&](std::uint64_t m) { return std::binary_search(primes.begin(), primes.end(), m); };
        const auto twins = twin_prime_lower_members(limit);
        for (std::uint64_t p = 0; p < limit + 5; ++p) {
            const bool expected = p < limit && p > 2 && listed(p) && listed(p + 2);
            CHECK(std::binary_search(twins.begin(), twins.end(), p) == expected);
        }
    }
}
