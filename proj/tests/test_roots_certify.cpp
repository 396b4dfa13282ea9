#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heckoid/certify.hpp"

using namespace heckoid;

namespace {

const HeckoidIndex m3 = HeckoidIndex::from_two_n(3);
const HeckoidIndex m4 = HeckoidIndex::from_two_n(4);
const HeckoidIndex m6 = HeckoidIndex::from_two_n(6);
const SearchBudget default_budget{};

}  // namespace

TEST_CASE("trace targets") {
    CHECK(heckoid_trace_target(m4, 1) == 0.0);
    CHECK(heckoid_trace_target(m6, 1) == 1.0);
    CHECK(heckoid_trace_target(m3, 1) == -1.0);
    CHECK(heckoid_trace_target(HeckoidIndex::from_two_n(5), 1) ==
          doctest::Approx(2.0 * std::cos(2.0 * M_PI / 5.0)).epsilon(1e-15));
    CHECK_THROWS_AS(heckoid_trace_target(m4, 2), std::domain_error);
    CHECK_THROWS_AS(heckoid_trace_target(m6, 3), std::domain_error);
}

TEST_CASE("polynomial_roots on known polynomials") {
    // y^2 + 2 = 0
    auto roots = polynomial_roots({{2, 0}, {0, 0}, {1, 0}});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].imag() == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(roots[1].imag() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    // (y-1)(y-2)(y-3) = y^3 - 6y^2 + 11y - 6
    roots = polynomial_roots({{-6, 0}, {11, 0}, {-6, 0}, {1, 0}});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].real() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(roots[1].real() == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(roots[2].real() == doctest::Approx(3.0).epsilon(1e-10));

    // linear and degenerate
    CHECK(polynomial_roots({{4, 0}, {2, 0}}).size() == 1);
    CHECK(polynomial_roots({{4, 0}}).empty());
    CHECK(polynomial_roots({}).empty());

    // root at the origin deflates exactly
    roots = polynomial_roots({{0, 0}, {0, 0}, {1, 0}});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::complex<double>(0, 0));
}

TEST_CASE("heckoid roots for the trefoil at m = 4") {
    HeckoidRootSet set = heckoid_roots(Slope::of(1, 3), m4);
    CHECK(set.trace.c == std::vector<i128>{2, -1, -2, -1});
    CHECK_FALSE(set.degenerate);
    REQUIRE(set.roots.size() == 3);
    for (const HeckoidRoot& root : set.roots) {
        CHECK(root.residual < 1e-25);
        // the defining property: |tr rho(u_r)(y*)| < tol for target 0
        CHECK(std::abs(set.trace.eval(root.y)) < 1e-10);
    }
    // one real root near 0.6956, a conjugate complex pair
    int real_count = 0;
    for (const HeckoidRoot& root : set.roots)
        if (std::abs(root.y.imag()) < 1e-12) ++real_count;
    CHECK(real_count == 1);
}

TEST_CASE("heckoid roots are deterministic") {
    HeckoidRootSet a = heckoid_roots(Slope::of(2, 5), m4);
    HeckoidRootSet b = heckoid_roots(Slope::of(2, 5), m4);
    REQUIRE(a.roots.size() == b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) CHECK(a.roots[i].y == b.roots[i].y);
}

TEST_CASE("Hopf link trace condition has nonreal roots at m = 4") {
    // recorded observation: y^2 + 2 = 0 has roots ±i√2
    HeckoidRootSet set = heckoid_roots(Slope::of(1, 2), m4);
    REQUIRE(set.roots.size() == 2);
    for (const HeckoidRoot& root : set.roots) CHECK(std::abs(root.y.imag()) > 1.0);
}

TEST_CASE("elliptic order at heckoid roots") {
    for (const auto& [r, idx] : {std::pair{Slope::of(1, 3), m4}, {Slope::of(2, 3), m4},
                                 {Slope::of(1, 3), m3}, {Slope::of(2, 5), m4}}) {
        Certification cert = elliptic_order_check(r, idx, 1e-9, 1e-3);
        CHECK(cert.all_pass);
        CHECK_FALSE(cert.reports.empty());
    }
}

TEST_CASE("epimorphism certification at the paper's slopes") {
    EpiCertification a =
        certify_epimorphism(Slope::of(13, 36), Slope::of(1, 3), m4, default_budget, 1e-9);
    CHECK(a.route.route == EpiRoute::via_s);
    CHECK(a.cert.all_pass);
    REQUIRE(a.cert.reports.size() == 3);
    for (const auto& report : a.cert.reports)
        for (const auto& check : report.checks) CHECK(check.residual < 1e-9);

    EpiCertification b =
        certify_epimorphism(Slope::of(25, 36), Slope::of(2, 3), m4, default_budget, 1e-9);
    CHECK(b.cert.all_pass);

    EpiCertification inf =
        certify_epimorphism(Slope::infinity(), Slope::of(2, 3), m4, default_budget, 1e-9);
    CHECK(inf.cert.all_pass);
    CHECK(inf.cert.reports.empty());

    CHECK_THROWS_AS(
        certify_epimorphism(Slope::of(1, 3), Slope::of(2, 3), m4, default_budget, 1e-9),
        precondition_error);
}

TEST_CASE("zero tolerance fails deterministically") {
    EpiCertification a =
        certify_epimorphism(Slope::of(13, 36), Slope::of(1, 3), m4, default_budget, 0.0);
    CHECK_FALSE(a.cert.all_pass);
}

TEST_CASE("trace invariance across the orbit") {
    Certification pair = trace_invariance_check(Slope::of(13, 36), Slope::of(59, 36),
                                                Slope::of(1, 3), m4, default_budget, 1e-9);
    CHECK(pair.all_pass);

    Certification self = trace_invariance_check(Slope::of(13, 36), Slope::of(13, 36),
                                                Slope::of(1, 3), m4, default_budget, 1e-9);
    CHECK(self.all_pass);
    for (const auto& report : self.reports)
        for (const auto& check : report.checks) CHECK(check.residual == 0.0);

    Certification negated = trace_invariance_check(Slope::of(13, 36), Slope::of(-13, 36),
                                                   Slope::of(1, 3), m4, default_budget, 1e-9);
    CHECK(negated.all_pass);

    CHECK_THROWS_AS(trace_invariance_check(Slope::of(1, 3), Slope::of(13, 36), Slope::of(1, 3),
                                           m4, default_budget, 1e-9),
                    precondition_error);
}

TEST_CASE("divisibility shadow with positive and negative cases") {
    DivisibilityResult pos =
        divisibility_check(Slope::of(13, 36), Slope::of(1, 3), m4, default_budget, 1e-9);
    CHECK(pos.membership.is_member());
    CHECK(pos.all_pass);

    DivisibilityResult pos2 =
        divisibility_check(Slope::of(25, 36), Slope::of(2, 3), m4, default_budget, 1e-9);
    CHECK(pos2.all_pass);

    DivisibilityResult neg =
        divisibility_check(Slope::of(1, 3), Slope::of(2, 3), m4, default_budget, 1e-9);
    CHECK_FALSE(neg.membership.is_member());
    CHECK_FALSE(neg.all_pass);
    // The residual checks themselves fail: the word is genuinely far from ±I.
    bool some_residual_fail = false;
    for (const auto& report : neg.cert.reports)
        for (const auto& check : report.checks) some_residual_fail |= !check.pass;
    CHECK(some_residual_fail);
}

TEST_CASE("trefoil presentation admits an irreducible parabolic representation") {
    // At y = -1 the relator of <a,b | abaBAB> maps to the identity while the
    // generators stay noncommuting: the quotient is nonabelian. A wrong word
    // convention would fail here immediately.
    GroupWord u = slope_word(Slope::of(1, 3));
    ddc y = ddc::from({-1.0, 0.0});
    Mat2dd m = word_matrix_dd(u, y);
    int sign = 0;
    CHECK(residual_pm_identity(m, sign) < 1e-12);
    CHECK(sign == +1);
    // tr(rho(ab)) = 2 + y = 1 != 2, so the representation is irreducible.
    Mat2dd ab = word_matrix_dd(GroupWord::parse("ab"), y);
    CHECK(std::abs(ab.trace().to_complex() - std::complex<double>(1.0, 0.0)) < 1e-12);
}

TEST_CASE("odd index: the trace condition certifies the integer-index suborbit") {
    // At roots of tr(u_r) = 2cos(2πk/m) with m odd, the image of u_r is a
    // PSL-elliptic of order m (not m/2), so the representation factors only
    // through the integer-index quotient: words of slopes reached by even
    // powers of the 2n-unit parabolic collapse to ±I, odd powers do not.
    // Recorded behavior; the group-level epimorphism is not in question.
    auto residual = [](const Slope& s, const Slope& r, HeckoidIndex idx) {
        double worst = 0.0;
        for (const HeckoidRoot& root : heckoid_roots(r, idx).roots) {
            Mat2dd m = word_matrix_dd(slope_word(s), ddc::from(root.y));
            int sign = 0;
            worst = std::max(worst, residual_pm_identity(m, sign));
        }
        return worst;
    };

    // r = 1/3, m = 3: T = parabolic^3, T^j(∞) = (9j+1)/27j.
    CHECK(residual(Slope::of(19, 54), Slope::of(1, 3), m3) < 1e-12);   // T^2
    CHECK(residual(Slope::of(37, 108), Slope::of(1, 3), m3) < 1e-12);  // T^4
    CHECK(residual(Slope::of(10, 27), Slope::of(1, 3), m3) > 1e-3);    // T^1
    CHECK(residual(Slope::of(28, 81), Slope::of(1, 3), m3) > 1e-3);    // T^3

    // Riley's odd-index family member 19/27 = T^1(∞) for r = 2/3, m = 3
    // behaves the same way.
    CHECK(riley_family(3, 1, 2, 3, 1) == Slope::of(19, 27));
    CHECK(residual(Slope::of(19, 27), Slope::of(2, 3), m3) > 1e-3);
    CHECK(residual(Slope::of(37, 54), Slope::of(2, 3), m3) < 1e-12);   // T^2
}

TEST_CASE("dd word products agree with double products on short words") {
    GroupWord w = slope_word(Slope::of(2, 5));
    std::complex<double> y(0.31, -0.27);
    Mat2dd m = word_matrix_dd(w, ddc::from(y));

    std::complex<double> num[4] = {1, 0, 0, 1};
    auto mul = [&](std::complex<double> a, std::complex<double> b, std::complex<double> c,
                   std::complex<double> d) {
        std::complex<double> na = num[0] * a + num[1] * c;
        std::complex<double> nb = num[0] * b + num[1] * d;
        std::complex<double> nc = num[2] * a + num[3] * c;
        std::complex<double> nd = num[2] * b + num[3] * d;
        num[0] = na; num[1] = nb; num[2] = nc; num[3] = nd;
    };
    for (std::int8_t l : w.letters) {
        switch (l) {
            case 1: mul(1, 1, 0, 1); break;
            case -1: mul(1, -1, 0, 1); break;
            case 2: mul(1, 0, y, 1); break;
            default: mul(1, 0, -y, 1); break;
        }
    }
    CHECK(std::abs(m.a.to_complex() - num[0]) < 1e-10);
    CHECK(std::abs(m.b.to_complex() - num[1]) < 1e-10);
    CHECK(std::abs(m.c.to_complex() - num[2]) < 1e-10);
    CHECK(std::abs(m.d.to_complex() - num[3]) < 1e-10);
}
