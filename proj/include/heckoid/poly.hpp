#pragma once

#include <complex>
#include <string>
#include <vector>

#include "heckoid/numeric.hpp"

namespace heckoid {

// Univariate polynomial in the parabolic-representation variable y, with
// exact integer coefficients (128-bit; products along long words stay exact).
// Coefficients ascending; normalized with no trailing zeros (empty = 0).
struct Poly {
    std::vector<i128> c;

    static Poly zero() { return Poly{}; }
    static Poly constant(i128 v);
    static Poly variable();  // y

    int degree() const { return static_cast<int>(c.size()) - 1; }
    i128 at(std::size_t i) const { return i < c.size() ? c[i] : 0; }
    bool is_zero() const { return c.empty(); }

    void normalize();

    std::complex<double> eval(std::complex<double> y) const;

    std::string str() const;  // e.g. "-y^3 - 2y^2 - y + 2"

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly add(const Poly& p, const Poly& q);
Poly sub(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
Poly neg(const Poly& p);
Poly derivative(const Poly& p);

}  // namespace heckoid
