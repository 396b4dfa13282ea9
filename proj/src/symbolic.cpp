#include "heckoid/symbolic.hpp"

namespace heckoid {

PolyMat2 PolyMat2::identity() {
    return PolyMat2{Poly::constant(1), Poly::zero(), Poly::zero(), Poly::constant(1)};
}

PolyMat2 PolyMat2::times(const PolyMat2& o) const {
    return PolyMat2{add(mul(a, o.a), mul(b, o.c)), add(mul(a, o.b), mul(b, o.d)),
                    add(mul(c, o.a), mul(d, o.c)), add(mul(c, o.b), mul(d, o.d))};
}

Poly det_poly(const PolyMat2& m) { return sub(mul(m.a, m.d), mul(m.b, m.c)); }

namespace {

PolyMat2 letter_matrix(std::int8_t l) {
    const Poly one = Poly::constant(1);
    const Poly y = Poly::variable();
    switch (l) {
        case 1:  return PolyMat2{one, one, Poly::zero(), one};
        case -1: return PolyMat2{one, Poly::constant(-1), Poly::zero(), one};
        case 2:  return PolyMat2{one, Poly::zero(), y, one};
        default: return PolyMat2{one, Poly::zero(), neg(y), one};
    }
}

}  // namespace

PolyMat2 word_matrix_symbolic(const GroupWord& w) {
    PolyMat2 m = PolyMat2::identity();
    for (std::int8_t l : w.letters) m = m.times(letter_matrix(l));
    return m;
}

Poly trace_poly(const GroupWord& w) {
    PolyMat2 m = word_matrix_symbolic(w);
    return add(m.a, m.d);
}

}  // namespace heckoid
