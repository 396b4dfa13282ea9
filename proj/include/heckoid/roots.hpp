#pragma once

#include <complex>
#include <vector>

#include "heckoid/dd.hpp"
#include "heckoid/index.hpp"
#include "heckoid/poly.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

// All complex roots of a polynomial (ascending coefficients), by a
// deterministic Aberth-Ehrlich iteration with fixed seeding. Roots are sorted
// by (re, im).
std::vector<std::complex<double>> polynomial_roots(std::vector<std::complex<double>> coeffs);

// 2cos(2πk/m) for m = idx.two_n; requires gcd(k, m) = 1. The image of the
// lower relator word must have this trace for it to be elliptic of order
// dividing m, as the Heckoid quotient demands.
double heckoid_trace_target(HeckoidIndex idx, i64 k = 1);
dd heckoid_trace_target_dd(HeckoidIndex idx, i64 k = 1);

struct HeckoidRoot {
    std::complex<double> y;
    double residual;  // |trace_poly(u_r)(y) − target|, double-double evaluation
};

struct HeckoidRootSet {
    Poly trace;       // trace_poly(slope_word(r))
    double target;    // 2cos(2πk/m)
    bool degenerate = false;  // constant trace polynomial; no roots reported
    std::vector<HeckoidRoot> roots;
};

// Roots of trace_poly(slope_word(r)) − 2cos(2πk/m), Newton-polished in
// double-double; canonical (re, im) order.
HeckoidRootSet heckoid_roots(const Slope& r, HeckoidIndex idx, i64 k = 1);

}  // namespace heckoid
