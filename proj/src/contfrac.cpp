#include "heckoid/contfrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckoid {

ContFrac cf_expand(const Slope& s) {
    if (!s.in_unit_interval())
        throw std::domain_error("cf_expand requires a slope strictly between 0 and 1");
    ContFrac f;
    i64 q = s.num, p = s.den;
    // Greedy expansion; gcd(q, p) = 1 guarantees the last quotient is >= 2.
    while (q != 0) {
        f.terms.push_back(p / q);
        i64 rem = p % q;
        p = q;
        q = rem;
    }
    return f;
}

Slope cf_eval(const ContFrac& f) {
    if (f.terms.empty()) return Slope::infinity();
    // Fold the projective column vector from the innermost quotient outward:
    // each term a acts as (x, y) ↦ (y, x + a·y). The running vector stays
    // coprime because every step is unimodular.
    i128 x = 0, y = 1;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        i128 nx = y;
        i128 ny = checked_add128(x, checked_mul128(i128(*it), y));
        x = nx;
        y = ny;
    }
    if (y == 0) return Slope::infinity();
    i128 num = checked_add128(x, checked_mul128(i128(f.whole), y));
    Slope v = Slope::of(narrow_i64(num, "cf_eval numerator"), narrow_i64(y, "cf_eval denominator"));
    return v;
}

std::vector<i64> seq_transform(std::vector<i64> terms, SeqTransform kind) {
    switch (kind) {
        case SeqTransform::reverse:
            std::reverse(terms.begin(), terms.end());
            break;
        case SeqTransform::negate:
            for (auto& t : terms) t = checked_neg(t);
            break;
        case SeqTransform::negate_reverse:
            std::reverse(terms.begin(), terms.end());
            for (auto& t : terms) t = checked_neg(t);
            break;
    }
    return terms;
}

}  // namespace heckoid
