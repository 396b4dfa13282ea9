#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heckoid {

using i64 = std::int64_t;
using i128 = __int128;

[[noreturn]] inline void throw_overflow(const char* where) {
    throw std::overflow_error(std::string("integer overflow in ") + where);
}

inline i64 checked_add(i64 x, i64 y) {
    i64 r;
    if (__builtin_add_overflow(x, y, &r)) throw_overflow("add");
    return r;
}

inline i64 checked_sub(i64 x, i64 y) {
    i64 r;
    if (__builtin_sub_overflow(x, y, &r)) throw_overflow("sub");
    return r;
}

inline i64 checked_mul(i64 x, i64 y) {
    i64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw_overflow("mul");
    return r;
}

inline i64 checked_neg(i64 x) { return checked_sub(0, x); }

inline i128 checked_add128(i128 x, i128 y) {
    i128 r;
    if (__builtin_add_overflow(x, y, &r)) throw_overflow("add128");
    return r;
}

inline i128 checked_mul128(i128 x, i128 y) {
    i128 r;
    if (__builtin_mul_overflow(x, y, &r)) throw_overflow("mul128");
    return r;
}

inline i64 narrow_i64(i128 v, const char* where) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw_overflow(where);
    return static_cast<i64>(v);
}

// floor division; requires b > 0
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline i64 gcd_nonneg(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline i64 checked_pow(i64 base, i64 exp) {
    i64 r = 1;
    for (i64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::string to_string_i128(i128 v);

}  // namespace heckoid
