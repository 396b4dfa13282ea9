#pragma once

#include <compare>

#include "heckoid/numeric.hpp"

namespace heckoid {

// A point of Q ∪ {∞} as a reduced fraction. den == 0 encodes ∞, stored as
// (1, 0); otherwise den > 0, gcd(|num|, den) == 1 and the sign lives in num.
struct Slope {
    i64 num = 0;
    i64 den = 1;

    static Slope infinity() { return Slope{1, 0}; }
    static Slope integer(i64 n) { return Slope{n, 1}; }
    static Slope of(i64 num, i64 den);

    bool is_infinite() const { return den == 0; }
    bool in_unit_interval() const { return den > 0 && num > 0 && num < den; }

    Slope negated() const { return is_infinite() ? *this : Slope{-num, den}; }
    Slope plus_integer(i64 k) const {
        if (is_infinite()) return *this;
        return Slope{checked_add(num, checked_mul(k, den)), den};
    }
    // x ↦ 2k − x
    Slope reflected_about(i64 k) const {
        if (is_infinite()) return *this;
        return Slope{checked_sub(checked_mul(2 * k, den), num), den};
    }

    friend bool operator==(const Slope&, const Slope&) = default;
};

// Canonical order: ∞ first, then by value. Used for deterministic orbit sets.
inline bool operator<(const Slope& a, const Slope& b) {
    if (a.den == 0 || b.den == 0) return a.den == 0 && b.den != 0;
    return i128(a.num) * b.den < i128(b.num) * a.den;
}

}  // namespace heckoid
