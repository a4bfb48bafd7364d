#pragma once

// Worked rows from the published proof table, transcribed as printed:
// (p, n, value inside the bars, stated magnitude).

#include <array>
#include <cstdint>

namespace primegen::fixtures {

struct PublishedRow {
    std::int64_t p;
    std::int64_t n;
    std::int64_t listed_raw;
    std::uint64_t listed_magnitude;
};

inline constexpr std::array<PublishedRow, 85> kPublishedRows{{
    {3, 0, 5, 5},
    {3, 1, 5, 5},
    {5, -1, -5, 5},
    {5, 0, 7, 7},
    {5, 1, 11, 11},
    {5, 2, 7, 7},
    {5, 3, -5, 5},
    {11, -4, -131, 131},
    {11, -3, -83, 83},
    {11, -2, -43, 43},
    {11, -1, -11, 11},
    {11, 0, 13, 13},
    {11, 1, 29, 29},
    {11, 2, 37, 37},
    {11, 3, 37, 37},
    {11, 4, 29, 29},
    {11, 5, 13, 13},
    {11, 6, -11, 11},
    {11, 7, -43, 43},
    {11, 8, -83, 83},
    {11, 9, -131, 131},
    {17, -7, -401, 401},
    {17, -6, -317, 317},
    {17, -5, 241, 241},
    {17, -4, -173, 173},
    {17, -3, -113, 113},
    {17, -2, -61, 61},
    {17, -1, -17, 17},
    {17, 0, 19, 19},
    {17, 1, 47, 47},
    {17, 2, 67, 67},
    {17, 3, 79, 79},
    {17, 4, 83, 83},
    {17, 5, 79, 79},
    {17, 6, 67, 67},
    {17, 7, 47, 47},
    {17, 8, 19, 19},
    {17, 9, -17, 17},
    {17, 10, -61, 61},
    {17, 11, -113, 113},
    {17, 12, -173, 173},
    {17, 13, -241, 241},
    {17, 14, -317, 317},
    {17, 15, -401, 401},
    {29, -13, -1373, 1373},
    {29, -12, -1217, 1217},
    {29, -11, -1069, 1069},
    {29, -10, -929, 929},
    {29, -9, -797, 797},
    {29, -8, -673, 673},
    {29, -7, -557, 557},
    {29, -6, -449, 449},
    {29, -5, -349, 349},
    {29, -4, -257, 257},
    {29, -3, -173, 173},
    {29, -2, -97, 97},
    {29, -1, -29, 29},
    {29, 0, 31, 31},
    {29, 1, 127, 127},
    {29, 2, 163, 163},
    {29, 3, 191, 191},
    {29, 4, 211, 211},
    {29, 5, 223, 223},
    {29, 6, 227, 227},
    {29, 7, 223, 223},
    {29, 8, 211, 211},
    {29, 9, 191, 191},
    {29, 10, 79, 79},
    {29, 11, 163, 163},
    {29, 12, 127, 127},
    {29, 13, 83, 83},
    {29, 14, 31, 31},
    {29, 15, -29, 29},
    {29, 16, -97, 97},
    {29, 17, -173, 173},
    {29, 18, -257, 257},
    {29, 19, -349, 349},
    {29, 20, -449, 449},
    {29, 21, -557, 557},
    {29, 22, -673, 673},
    {29, 23, -797, 797},
    {29, 24, -929, 929},
    {29, 25, -1069, 1069},
    {29, 26, -1217, 1217},
    {29, 27, -1373, 1373},
}};

// Rows whose printed value disagrees with (1 + 2n)(p - 2n) + 2.
// p = 29, n = 1..10 are shifted by one position; p = 17, n = -5 drops the sign.
struct Erratum {
    std::int64_t p;
    std::int64_t n;
    bool sign_only;
};
inline constexpr std::array<Erratum, 11> kErrata{{
    {17, -5, true},
    {29, 1, false},
    {29, 2, false},
    {29, 3, false},
    {29, 4, false},
    {29, 5, false},
    {29, 6, false},
    {29, 7, false},
    {29, 8, false},
    {29, 9, false},
    {29, 10, false},
}};

inline constexpr bool is_erratum(std::int64_t p, std::int64_t n) {
    for (const auto& e : kErrata)
        if (e.p == p && e.n == n) return true;
    return false;
}

}  // namespace primegen::fixtures
