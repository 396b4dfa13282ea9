#pragma once

#include "heckoid/slope.hpp"

namespace heckoid {

// 2×2 integer matrix of determinant ±1, canonicalized modulo global sign:
// the first nonzero entry in row-major order is positive. Acts on slopes as
// x ↦ (ax+b)/(cx+d); det −1 marks orientation-reversing elements.
struct FareyMatrix {
    i64 a = 1, b = 0, c = 0, d = 1;

    static FareyMatrix identity() { return FareyMatrix{}; }
    static FareyMatrix from_entries(i64 a, i64 b, i64 c, i64 d);

    i64 det() const;
    FareyMatrix times(const FareyMatrix& o) const;
    FareyMatrix inverse() const;
    Slope apply(const Slope& s) const;

    friend bool operator==(const FareyMatrix&, const FareyMatrix&) = default;
};

// Reflection in the tessellation edge {k, ∞}: x ↦ 2k − x. The reflection
// group at ∞ is generated by k = 0 and k = 1.
FareyMatrix reflection_at_infinity(i64 k);

enum class ParabolicDirection { clockwise, counterclockwise };

// Primitive parabolic fixing r = q/p: I + [[qp, −q²], [p², −qp]] (clockwise
// convention; the other direction is its inverse). For r = ∞ the translation
// x ↦ x + 1 is returned.
FareyMatrix parabolic_unit(const Slope& r,
                           ParabolicDirection dir = ParabolicDirection::clockwise);

// j-th power of the primitive parabolic, in closed form I + jN.
FareyMatrix parabolic_power(const Slope& r, i64 j,
                            ParabolicDirection dir = ParabolicDirection::clockwise);

}  // namespace heckoid
