#pragma once

#include "heckoid/poly.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

struct PolyMat2 {
    Poly a, b, c, d;

    static PolyMat2 identity();
    PolyMat2 times(const PolyMat2& o) const;

    friend bool operator==(const PolyMat2&, const PolyMat2&) = default;
};

Poly det_poly(const PolyMat2& m);

// Exact image of a word under the standard normalized parabolic pair
//   a ↦ [[1, 1], [0, 1]],  b ↦ [[1, 0], [y, 1]].
// The determinant is identically 1.
PolyMat2 word_matrix_symbolic(const GroupWord& w);

// Trace of the above; value at y = 0 is 2 for every word.
Poly trace_poly(const GroupWord& w);

}  // namespace heckoid
