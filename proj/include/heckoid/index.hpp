#pragma once

#include <stdexcept>

#include "heckoid/numeric.hpp"

namespace heckoid {

// The Heckoid index n > 1, an integer or half-integer, stored as m = 2n ≥ 3.
// Even m (integer n) and odd m (half-integer n) behave differently: only the
// even case yields a one-relator presentation.
struct HeckoidIndex {
    i64 two_n = 4;

    static HeckoidIndex from_two_n(i64 m) {
        if (m < 3) throw std::domain_error("Heckoid index requires 2n >= 3 (n > 1)");
        return HeckoidIndex{m};
    }
    static HeckoidIndex from_integer_n(i64 n) { return from_two_n(checked_mul(2, n)); }

    i64 m() const { return two_n; }
    bool is_even() const { return two_n % 2 == 0; }
    i64 integer_n() const {
        if (!is_even()) throw std::domain_error("index n is a half-integer, not an integer");
        return two_n / 2;
    }

    friend bool operator==(const HeckoidIndex&, const HeckoidIndex&) = default;
};

}  // namespace heckoid
