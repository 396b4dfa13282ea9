#include "heckoid/slope.hpp"

#include <stdexcept>

namespace heckoid {

Slope Slope::of(i64 num, i64 den) {
    if (num == 0 && den == 0) throw std::domain_error("slope 0/0 is undefined");
    if (den == 0) return Slope{1, 0};
    if (den < 0) {
        num = checked_neg(num);
        den = checked_neg(den);
    }
    if (num == 0) return Slope{0, 1};
    i64 g = gcd_nonneg(num, den);
    return Slope{num / g, den / g};
}

}  // namespace heckoid
