#include "heckoid/poly.hpp"

namespace heckoid {

Poly Poly::constant(i128 v) {
    Poly p;
    if (v != 0) p.c.push_back(v);
    return p;
}

Poly Poly::variable() {
    Poly p;
    p.c = {0, 1};
    return p;
}

void Poly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::complex<double> Poly::eval(std::complex<double> y) const {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * y + static_cast<double>(*it);
    return acc;
}

std::string Poly::str() const {
    if (c.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        i128 v = at(static_cast<std::size_t>(i));
        if (v == 0) continue;
        bool neg = v < 0;
        i128 mag = neg ? -v : v;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1 || i == 0) out += to_string_i128(mag);
        if (i >= 1) out += "y";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Poly add(const Poly& p, const Poly& q) {
    Poly out;
    out.c.resize(std::max(p.c.size(), q.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = checked_add128(p.at(i), q.at(i));
    out.normalize();
    return out;
}

Poly neg(const Poly& p) {
    Poly out = p;
    for (auto& v : out.c) v = -v;
    return out;
}

Poly sub(const Poly& p, const Poly& q) { return add(p, neg(q)); }

Poly mul(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly::zero();
    Poly out;
    out.c.assign(p.c.size() + q.c.size() - 1, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < q.c.size(); ++j)
            out.c[i + j] = checked_add128(out.c[i + j], checked_mul128(p.c[i], q.c[j]));
    out.normalize();
    return out;
}

Poly derivative(const Poly& p) {
    Poly out;
    if (p.c.size() <= 1) return out;
    out.c.resize(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i)
        out.c[i - 1] = checked_mul128(p.c[i], i128(i));
    out.normalize();
    return out;
}

}  // namespace heckoid
