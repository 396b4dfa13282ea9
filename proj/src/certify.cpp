#include "heckoid/certify.hpp"

#include <algorithm>
#include <cmath>

namespace heckoid {

Mat2dd Mat2dd::identity() {
    ddc one{dd::from(1.0), dd::from(0.0)};
    ddc zero{dd::from(0.0), dd::from(0.0)};
    return Mat2dd{one, zero, zero, one};
}

Mat2dd Mat2dd::times(const Mat2dd& o) const {
    return Mat2dd{ddc_add(ddc_mul(a, o.a), ddc_mul(b, o.c)),
                  ddc_add(ddc_mul(a, o.b), ddc_mul(b, o.d)),
                  ddc_add(ddc_mul(c, o.a), ddc_mul(d, o.c)),
                  ddc_add(ddc_mul(c, o.b), ddc_mul(d, o.d))};
}

namespace {

Mat2dd letter_matrix_dd(std::int8_t l, ddc y) {
    ddc one{dd::from(1.0), dd::from(0.0)};
    ddc zero{dd::from(0.0), dd::from(0.0)};
    switch (l) {
        case 1:  return Mat2dd{one, one, zero, one};
        case -1: return Mat2dd{one, ddc{dd::from(-1.0), dd::from(0.0)}, zero, one};
        case 2:  return Mat2dd{one, zero, y, one};
        default: return Mat2dd{one, zero, ddc_neg(y), one};
    }
}

}  // namespace

Mat2dd word_matrix_dd(const GroupWord& w, ddc y) {
    Mat2dd m = Mat2dd::identity();
    for (std::int8_t l : w.letters) m = m.times(letter_matrix_dd(l, y));
    return m;
}

Mat2dd mat_power(Mat2dd m, i64 e) {
    Mat2dd acc = Mat2dd::identity();
    for (i64 i = 0; i < e; ++i) acc = acc.times(m);
    return acc;
}

double residual_pm_identity(const Mat2dd& m, int& sign_out) {
    auto dist = [&](double s) {
        ddc sa = ddc_sub(m.a, ddc{dd::from(s), dd::from(0.0)});
        ddc sd = ddc_sub(m.d, ddc{dd::from(s), dd::from(0.0)});
        return std::max({ddc_abs(sa), ddc_abs(m.b), ddc_abs(m.c), ddc_abs(sd)});
    };
    double plus = dist(1.0), minus = dist(-1.0);
    sign_out = plus <= minus ? +1 : -1;
    return std::min(plus, minus);
}

void CertificationReport::add(CheckResult c) {
    pass = pass && c.pass;
    checks.push_back(std::move(c));
}

namespace {

Certification make_cert(const std::string& context) {
    Certification cert;
    cert.context = context;
    return cert;
}

void finish(Certification& cert) {
    cert.all_pass = std::all_of(cert.reports.begin(), cert.reports.end(),
                                [](const CertificationReport& r) { return r.pass; });
}

CheckResult unity_check(const std::string& name, const GroupWord& w,
                        std::complex<double> root, double tol) {
    Mat2dd m = word_matrix_dd(w, ddc::from(root));
    int sign = 0;
    double residual = residual_pm_identity(m, sign);
    return CheckResult{name, residual, tol, residual < tol, sign};
}

}  // namespace

EpiCertification certify_epimorphism(const Slope& s, const Slope& r, HeckoidIndex idx,
                                     const SearchBudget& budget, double tol, i64 k) {
    EpiCertification out;
    out.route = admits_epimorphism(s, r, idx, budget);
    if (!out.route.is_member())
        throw precondition_error("neither s nor s+1 was found in the orbit within the budget");
    out.cert = make_cert("epimorphism certificate");

    // Whichever of s, s+1 lies in the orbit must map to ±I at every root.
    const Slope target = out.route.route == EpiRoute::via_s ? s : s.plus_integer(1);
    if (target.is_infinite()) {
        // Empty word; vacuously the identity.
        out.cert.all_pass = true;
        return out;
    }
    const GroupWord w = slope_word(target);
    for (const HeckoidRoot& root : heckoid_roots(r, idx, k).roots) {
        CertificationReport report;
        report.root = root.y;
        report.add(unity_check("word_unity", w, root.y, tol));
        out.cert.reports.push_back(std::move(report));
    }
    finish(out.cert);
    return out;
}

Certification trace_invariance_check(const Slope& s, const Slope& s2, const Slope& r,
                                     HeckoidIndex idx, const SearchBudget& budget,
                                     double tol, i64 k) {
    if (!is_in_orbit(s, r, idx, budget).is_member() ||
        !is_in_orbit(s2, r, idx, budget).is_member())
        throw precondition_error("both slopes must carry orbit witnesses within the budget");
    Certification cert = make_cert("trace invariance");
    const GroupWord w1 = slope_word(s);
    const GroupWord w2 = slope_word(s2);
    for (const HeckoidRoot& root : heckoid_roots(r, idx, k).roots) {
        ddc t1 = word_matrix_dd(w1, ddc::from(root.y)).trace();
        ddc t2 = word_matrix_dd(w2, ddc::from(root.y)).trace();
        double residual = ddc_abs(ddc_sub(t1, t2));
        CertificationReport report;
        report.root = root.y;
        report.add(CheckResult{"trace_match", residual, tol, residual < tol, 0});
        cert.reports.push_back(std::move(report));
    }
    finish(cert);
    return cert;
}

DivisibilityResult divisibility_check(const Slope& s, const Slope& r, HeckoidIndex idx,
                                      const SearchBudget& budget, double tol, i64 k) {
    DivisibilityResult out;
    out.membership = is_in_orbit(s, r, idx, budget);
    out.cert = make_cert("divisibility shadow");
    if (!s.is_infinite()) {
        const GroupWord w = slope_word(s);
        for (const HeckoidRoot& root : heckoid_roots(r, idx, k).roots) {
            CertificationReport report;
            report.root = root.y;
            report.add(unity_check("word_unity", w, root.y, tol));
            out.cert.reports.push_back(std::move(report));
        }
    }
    finish(out.cert);
    out.all_pass = out.membership.is_member() && out.cert.all_pass;
    return out;
}

Certification elliptic_order_check(const Slope& r, HeckoidIndex idx, double tol,
                                   double separation, i64 k) {
    Certification cert = make_cert("elliptic order");
    const GroupWord w = slope_word(r);
    const i64 m = idx.m();
    for (const HeckoidRoot& root : heckoid_roots(r, idx, k).roots) {
        Mat2dd mat = word_matrix_dd(w, ddc::from(root.y));
        CertificationReport report;
        report.root = root.y;

        int sign = 0;
        double pow_residual = residual_pm_identity(mat_power(mat, m), sign);
        report.add(CheckResult{"order_m_power", pow_residual, tol, pow_residual < tol, sign});

        int sign2 = 0;
        double self_residual = residual_pm_identity(mat, sign2);
        report.add(CheckResult{"nontrivial", self_residual, separation,
                               self_residual > separation, 0});
        cert.reports.push_back(std::move(report));
    }
    finish(cert);
    return cert;
}

}  // namespace heckoid
