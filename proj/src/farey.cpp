#include "heckoid/farey.hpp"

#include <stdexcept>

namespace heckoid {

namespace {

void canonicalize_sign(i64& a, i64& b, i64& c, i64& d) {
    i64 lead = a != 0 ? a : b != 0 ? b : c != 0 ? c : d;
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
}

}  // namespace

FareyMatrix FareyMatrix::from_entries(i64 a, i64 b, i64 c, i64 d) {
    canonicalize_sign(a, b, c, d);
    FareyMatrix m{a, b, c, d};
    i64 det = m.det();
    if (det != 1 && det != -1)
        throw std::domain_error("Farey matrix must have determinant +1 or -1");
    return m;
}

i64 FareyMatrix::det() const {
    return checked_sub(checked_mul(a, d), checked_mul(b, c));
}

FareyMatrix FareyMatrix::times(const FareyMatrix& o) const {
    return from_entries(checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
                        checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
                        checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
                        checked_add(checked_mul(c, o.b), checked_mul(d, o.d)));
}

FareyMatrix FareyMatrix::inverse() const {
    // Adjugate; the global sign is quotiented out anyway.
    return from_entries(d, -b, -c, a);
}

Slope FareyMatrix::apply(const Slope& s) const {
    return Slope::of(checked_add(checked_mul(a, s.num), checked_mul(b, s.den)),
                     checked_add(checked_mul(c, s.num), checked_mul(d, s.den)));
}

FareyMatrix reflection_at_infinity(i64 k) {
    // x ↦ 2k − x
    return FareyMatrix::from_entries(-1, checked_mul(2, k), 0, 1);
}

FareyMatrix parabolic_unit(const Slope& r, ParabolicDirection dir) {
    return parabolic_power(r, 1, dir);
}

FareyMatrix parabolic_power(const Slope& r, i64 j, ParabolicDirection dir) {
    if (dir == ParabolicDirection::counterclockwise) j = checked_neg(j);
    if (r.is_infinite()) return FareyMatrix::from_entries(1, j, 0, 1);
    i64 q = r.num, p = r.den;
    i64 qp = checked_mul(q, p);
    return FareyMatrix::from_entries(checked_add(1, checked_mul(j, qp)),
                                     checked_neg(checked_mul(j, checked_mul(q, q))),
                                     checked_mul(j, checked_mul(p, p)),
                                     checked_sub(1, checked_mul(j, qp)));
}

}  // namespace heckoid
