#pragma once

#include <complex>
#include <string>
#include <vector>

#include "heckoid/dd.hpp"
#include "heckoid/orbit.hpp"
#include "heckoid/roots.hpp"
#include "heckoid/words.hpp"

namespace heckoid {

struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numeric 2×2 matrix in double-double, for word images at a chosen root.
struct Mat2dd {
    ddc a, b, c, d;

    static Mat2dd identity();
    Mat2dd times(const Mat2dd& o) const;
    ddc trace() const { return ddc_add(a, d); }
};

Mat2dd word_matrix_dd(const GroupWord& w, ddc y);
Mat2dd mat_power(Mat2dd m, i64 e);

// max entry modulus of M − sign·I, minimized over sign ∈ {+1, −1};
// sign_out records the nearer lift.
double residual_pm_identity(const Mat2dd& m, int& sign_out);

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int matched_sign = 0;  // ±1 when a sign lift was resolved, else 0
};

struct CertificationReport {
    std::complex<double> root;
    std::vector<CheckResult> checks;
    bool pass = true;

    void add(CheckResult c);
};

struct Certification {
    std::vector<CertificationReport> reports;  // canonical root order
    bool all_pass = true;
    std::string context;
};

// At every heckoid root y*, checks that the word of whichever of s, s+1 lies
// in the orbit evaluates to ±I within tol. Throws precondition_error when
// neither does within the budget.
struct EpiCertification {
    EpiVerdict route;
    Certification cert;
};
EpiCertification certify_epimorphism(const Slope& s, const Slope& r, HeckoidIndex idx,
                                     const SearchBudget& budget, double tol, i64 k = 1);

// Trace equality |tr ρ(u_s) − tr ρ(u_s')| < tol at every heckoid root;
// requires both slopes to carry orbit witnesses within the budget.
Certification trace_invariance_check(const Slope& s, const Slope& s2, const Slope& r,
                                     HeckoidIndex idx, const SearchBudget& budget,
                                     double tol, i64 k = 1);

// Numerical shadow of "the Heckoid condition divides the representation
// condition of the link of slope s": at each heckoid root, ρ(u_s) ∓ I within
// tol. Always evaluates; overall pass additionally requires an orbit witness,
// so a non-member is reported as a failure, not an error.
struct DivisibilityResult {
    MembershipVerdict membership;
    Certification cert;
    bool all_pass = false;
};
DivisibilityResult divisibility_check(const Slope& s, const Slope& r, HeckoidIndex idx,
                                      const SearchBudget& budget, double tol, i64 k = 1);

// At every heckoid root: ρ(u_r)^m within tol of ±I while ρ(u_r) itself stays
// at distance > separation from both ±I (order exactly dividing m, nontrivial).
Certification elliptic_order_check(const Slope& r, HeckoidIndex idx, double tol,
                                   double separation = 1e-3, i64 k = 1);

}  // namespace heckoid
