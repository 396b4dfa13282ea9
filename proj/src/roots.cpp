#include "heckoid/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "heckoid/symbolic.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

namespace {

using cd = std::complex<double>;

cd horner(const std::vector<cd>& a, cd z) {
    cd acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<cd> deriv(const std::vector<cd>& a) {
    std::vector<cd> d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * double(i));
    return d;
}

}  // namespace

std::vector<cd> polynomial_roots(std::vector<cd> coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1) return {};

    std::vector<cd> roots;
    // Deflate exact roots at the origin.
    std::size_t zeros = 0;
    while (zeros + 1 < coeffs.size() && coeffs[zeros] == 0.0) ++zeros;
    for (std::size_t i = 0; i < zeros; ++i) roots.push_back(0.0);
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));

    const std::size_t n = coeffs.size() - 1;
    if (n >= 1) {
        if (n == 1) {
            roots.push_back(-coeffs[0] / coeffs[1]);
        } else {
            const std::vector<cd> dcoeffs = deriv(coeffs);
            // Fixed seeding on a circle; no randomness anywhere.
            double radius = std::pow(std::abs(coeffs[0] / coeffs[n]), 1.0 / double(n));
            if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
            std::vector<cd> z(n);
            for (std::size_t k = 0; k < n; ++k) {
                double angle = 2.0 * std::numbers::pi * double(k) / double(n) + 0.45;
                z[k] = radius * cd(std::cos(angle), std::sin(angle));
            }
            for (int iter = 0; iter < 400; ++iter) {
                double worst = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    cd pv = horner(coeffs, z[k]);
                    cd dv = horner(dcoeffs, z[k]);
                    if (pv == 0.0) continue;
                    cd newton = dv == 0.0 ? cd(0.0) : pv / dv;
                    cd sum = 0.0;
                    for (std::size_t j = 0; j < n; ++j)
                        if (j != k) sum += 1.0 / (z[k] - z[j]);
                    cd denom = 1.0 - newton * sum;
                    cd step = denom == 0.0 ? newton : newton / denom;
                    z[k] -= step;
                    worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
                }
                if (worst < 1e-14) break;
            }
            roots.insert(roots.end(), z.begin(), z.end());
        }
    }

    std::sort(roots.begin(), roots.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

double heckoid_trace_target(HeckoidIndex idx, i64 k) {
    return heckoid_trace_target_dd(idx, k).to_double();
}

dd heckoid_trace_target_dd(HeckoidIndex idx, i64 k) {
    const i64 m = idx.m();
    i64 kk = ((k % m) + m) % m;
    if (gcd_nonneg(kk, m) != 1)
        throw std::domain_error("trace target requires gcd(k, 2n) = 1");
    // Exact values where they exist; long-double cosine otherwise.
    if (m == 3) return dd::from(-1.0);
    if (m == 4) return dd::from(0.0);
    if (m == 6) return dd::from(1.0);
    long double theta = 2.0L * 3.14159265358979323846264338327950288L *
                        static_cast<long double>(kk) / static_cast<long double>(m);
    long double t = 2.0L * std::cos(theta);
    double hi = static_cast<double>(t);
    double lo = static_cast<double>(t - static_cast<long double>(hi));
    return dd{hi, lo};
}

namespace {

ddc eval_poly_dd(const Poly& p, ddc y) {
    ddc acc{dd::from(0.0), dd::from(0.0)};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = ddc_mul(acc, y);
        acc.re = dd_add(acc.re, dd_from_i128(*it));
    }
    return acc;
}

}  // namespace

HeckoidRootSet heckoid_roots(const Slope& r, HeckoidIndex idx, i64 k) {
    if (!r.in_unit_interval())
        throw std::domain_error("heckoid_roots requires 0 < r < 1");
    HeckoidRootSet out;
    out.trace = trace_poly(slope_word(r));
    const dd target = heckoid_trace_target_dd(idx, k);
    out.target = target.to_double();

    Poly shifted = out.trace;
    if (shifted.degree() < 1) {
        out.degenerate = true;
        return out;
    }

    std::vector<std::complex<double>> coeffs(shifted.c.size());
    for (std::size_t i = 0; i < shifted.c.size(); ++i)
        coeffs[i] = static_cast<double>(shifted.c[i]);
    coeffs[0] -= out.target;

    const Poly dtrace = derivative(out.trace);
    for (std::complex<double> z : polynomial_roots(coeffs)) {
        // Newton polish in double-double against the exact coefficients.
        ddc y = ddc::from(z);
        double residual = 0.0;
        for (int it = 0; it < 8; ++it) {
            ddc f = eval_poly_dd(out.trace, y);
            f.re = dd_sub(f.re, target);
            residual = ddc_abs(f);
            if (residual == 0.0) break;
            ddc fp = eval_poly_dd(dtrace, y);
            if (ddc_abs(fp) == 0.0) break;
            y = ddc_sub(y, ddc_div(f, fp));
        }
        ddc f = eval_poly_dd(out.trace, y);
        f.re = dd_sub(f.re, target);
        residual = ddc_abs(f);
        out.roots.push_back(HeckoidRoot{y.to_complex(), residual});
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const HeckoidRoot& a, const HeckoidRoot& b) {
        if (a.y.real() != b.y.real()) return a.y.real() < b.y.real();
        return a.y.imag() < b.y.imag();
    });
    return out;
}

}  // namespace heckoid
