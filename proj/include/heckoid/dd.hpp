#pragma once

#include <cmath>
#include <complex>

#include "heckoid/numeric.hpp"

namespace heckoid {

// Compensated double-double arithmetic (~31 significant digits). Word-matrix
// products along length-72 relators pass through intermediates of norm up to
// ~1e7; plain doubles would leave the residual floor near the 1e-9 tolerance.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    static dd from(double x) { return dd{x, 0.0}; }
    double to_double() const { return hi + lo; }
};

namespace detail {
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    double bb = s - a;
    e = (a - (s - bb)) + (b - bb);
}
inline void quick_two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    e = b - (s - a);
}
inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}
}  // namespace detail

inline dd dd_add(dd a, dd b) {
    double s1, s2, t1, t2;
    detail::two_sum(a.hi, b.hi, s1, s2);
    detail::two_sum(a.lo, b.lo, t1, t2);
    s2 += t1;
    detail::quick_two_sum(s1, s2, s1, s2);
    s2 += t2;
    detail::quick_two_sum(s1, s2, s1, s2);
    return dd{s1, s2};
}

inline dd dd_neg(dd a) { return dd{-a.hi, -a.lo}; }
inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    double p1, p2;
    detail::two_prod(a.hi, b.hi, p1, p2);
    p2 += a.hi * b.lo + a.lo * b.hi;
    detail::quick_two_sum(p1, p2, p1, p2);
    return dd{p1, p2};
}

inline dd dd_mul_d(dd a, double b) {
    double p1, p2;
    detail::two_prod(a.hi, b, p1, p2);
    p2 += a.lo * b;
    detail::quick_two_sum(p1, p2, p1, p2);
    return dd{p1, p2};
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul_d(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_d(b, q2));
    double q3 = r.hi / b.hi;
    double s, e;
    detail::quick_two_sum(q1, q2, s, e);
    return dd_add(dd{s, e}, dd::from(q3));
}

inline dd dd_from_i128(i128 v) {
    double hi = static_cast<double>(v);
    double lo = static_cast<double>(v - static_cast<i128>(hi));
    return dd{hi, lo};
}

// Complex double-double.
struct ddc {
    dd re, im;

    static ddc from(std::complex<double> z) { return ddc{dd::from(z.real()), dd::from(z.imag())}; }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ddc ddc_add(ddc a, ddc b) { return ddc{dd_add(a.re, b.re), dd_add(a.im, b.im)}; }
inline ddc ddc_sub(ddc a, ddc b) { return ddc{dd_sub(a.re, b.re), dd_sub(a.im, b.im)}; }
inline ddc ddc_neg(ddc a) { return ddc{dd_neg(a.re), dd_neg(a.im)}; }

inline ddc ddc_mul(ddc a, ddc b) {
    return ddc{dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
               dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline ddc ddc_div(ddc a, ddc b) {
    dd n = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    ddc num = ddc_mul(a, ddc{b.re, dd_neg(b.im)});
    return ddc{dd_div(num.re, n), dd_div(num.im, n)};
}

inline double ddc_abs(ddc a) { return std::hypot(a.re.to_double(), a.im.to_double()); }

}  // namespace heckoid
