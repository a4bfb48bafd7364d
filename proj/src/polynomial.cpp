#include "primegen/polynomial.hpp"

#include <limits>
#include <sstream>

#include "primegen/checked.hpp"
#include "primegen/primality.hpp"

namespace primegen {
namespace {

__extension__ typedef __int128 i128;

i128 checked_mul128(i128 lhs, i128 rhs) {
    i128 out;
    if (__builtin_mul_overflow(lhs, rhs, &out))
        throw std::overflow_error("quadratic evaluation exceeds 128-bit intermediate range");
    return out;
}

i128 checked_add128(i128 lhs, i128 rhs) {
    i128 out;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw std::overflow_error("quadratic evaluation exceeds 128-bit intermediate range");
    return out;
}

std::int64_t narrow(i128 value) {
    if (value > std::numeric_limits<std::int64_t>::max() ||
        value < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("quadratic value does not fit in signed 64 bits");
    return static_cast<std::int64_t>(value);
}

}  // namespace

TwinPrimeSeed TwinPrimeSeed::make(std::int64_t p) {
    if (p <= 2) throw SeedError("p must be greater than 2 (got " + std::to_string(p) + ")");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw SeedError("p = " + std::to_string(p) + " is not prime");
    const std::int64_t partner = checked::add(p, 2);
    if (!is_prime(static_cast<std::uint64_t>(partner)))
        throw SeedError("p + 2 = " + std::to_string(partner) + " is not prime");
    return TwinPrimeSeed(p);
}

std::int64_t evaluate_family(const TwinPrimeSeed& seed, std::int64_t n) {
    const std::int64_t two_n = checked::mul(2, n);
    const std::int64_t left = checked::add(1, two_n);
    const std::int64_t right = checked::sub(seed.p(), two_n);
    return checked::add(checked::mul(left, right), 2);
}

QuadraticPolynomial expanded_family(const TwinPrimeSeed& seed) {
    const std::int64_t p = seed.p();
    return {-4, checked::mul(2, checked::sub(p, 1)), checked::add(p, 2)};
}

AdmissibleRange admissible_range(const TwinPrimeSeed& seed) {
    const std::int64_t p = seed.p();
    AdmissibleRange range;
    range.n_min = (3 - p) / 2;
    range.n_max = p - 2;
    range.count = range.n_max - range.n_min + 1;
    return range;
}

std::int64_t evaluate_quadratic(const QuadraticPolynomial& poly, std::int64_t n) {
    const i128 x = n;
    const i128 square_term = checked_mul128(checked_mul128(poly.a, x), x);
    const i128 linear_term = checked_mul128(poly.b, x);
    return narrow(checked_add128(checked_add128(square_term, linear_term), poly.c));
}

QuadraticPolynomial reflect(const QuadraticPolynomial& poly, std::int64_t x) {
    const std::int64_t b = checked::sub(checked::mul(checked::mul(-2, poly.a), x), poly.b);
    return {poly.a, b, evaluate_quadratic(poly, x)};
}

QuadraticPolynomial shift(const QuadraticPolynomial& poly, std::int64_t x) {
    return reflect(reflect(poly, 0), x);
}

std::int64_t endpoint_magnitude(const TwinPrimeSeed& seed) {
    const std::int64_t p = seed.p();
    return checked::mul(p, checked::sub(checked::mul(2, p), 5));
}

std::int64_t mirror_index(const TwinPrimeSeed& seed, std::int64_t n) {
    return checked::sub((seed.p() - 1) / 2, n);
}

std::string to_string(const QuadraticPolynomial& poly) {
    std::ostringstream out;
    bool first = true;
    auto term = [&](std::int64_t coeff, const char* var) {
        if (coeff == 0) return;
        const std::uint64_t mag = checked::magnitude(coeff);
        if (first)
            out << (coeff < 0 ? "-" : "");
        else
            out << (coeff < 0 ? " - " : " + ");
        if (mag != 1 || *var == '\0') out << mag;
        out << var;
        first = false;
    };
    term(poly.a, "n^2");
    term(poly.b, "n");
    term(poly.c, "");
    if (first) out << '0';
    return out.str();
}

}  // namespace primegen
