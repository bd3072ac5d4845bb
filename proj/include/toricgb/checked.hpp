#ifndef TORICGB_CHECKED_HPP
#define TORICGB_CHECKED_HPP

#include <cstdint>

#include "toricgb/errors.hpp"

namespace toricgb {

// 64-bit arithmetic that aborts with an explicit error instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InvariantError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw InvariantError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace toricgb

#endif
