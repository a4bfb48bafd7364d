#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace primegen {

// Signed 64-bit arithmetic that throws instead of wrapping.
namespace checked {

inline std::int64_t add(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out;
    if (__builtin_add_overflow(lhs, rhs, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " + " +
                                  std::to_string(rhs));
    return out;
}

inline std::int64_t sub(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out;
    if (__builtin_sub_overflow(lhs, rhs, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " - " +
                                  std::to_string(rhs));
    return out;
}

inline std::int64_t mul(std::int64_t lhs, std::int64_t rhs) {
    std::int64_t out;
    if (__builtin_mul_overflow(lhs, rhs, &out))
        throw std::overflow_error("integer overflow in " + std::to_string(lhs) + " * " +
                                  std::to_string(rhs));
    return out;
}

// |value| as an unsigned magnitude; well defined for INT64_MIN.
inline std::uint64_t magnitude(std::int64_t value) noexcept {
    return value < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(value)
                     : static_cast<std::uint64_t>(value);
}

}  // namespace checked
}  // namespace primegen
