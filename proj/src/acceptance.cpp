#include "heckoid/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <tuple>

#include "heckoid/certify.hpp"
#include "heckoid/cli.hpp"
#include "heckoid/orbifold.hpp"
#include "heckoid/symbolic.hpp"

namespace heckoid {

namespace {

using clock = std::chrono::steady_clock;

struct Runner {
    const RunConfig& config;
    std::vector<CriterionOutcome> outcomes;

    SearchBudget capped(i64 wl, i64 den, i64 t, i64 c) const {
        return SearchBudget{std::min(wl, config.budget.max_word_len),
                            std::min(den, config.budget.max_den),
                            std::min(t, config.budget.t_max),
                            std::min(c, config.budget.c_bound)};
    }

    template <typename F>
    void criterion(int number, const std::string& name, F&& body) {
        CriterionOutcome out;
        out.number = number;
        out.name = name;
        auto start = clock::now();
        try {
            std::ostringstream detail;
            out.pass = body(detail);
            out.detail = detail.str();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        out.seconds = std::chrono::duration<double>(clock::now() - start).count();
        outcomes.push_back(std::move(out));
    }
};

const std::vector<std::pair<Slope, i64>>& oracle_pairs() {
    static const std::vector<std::pair<Slope, i64>> pairs = {
        {Slope::of(1, 3), 4}, {Slope::of(2, 3), 4}, {Slope::of(1, 3), 3}, {Slope::of(2, 5), 4}};
    return pairs;
}

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const RunConfig& config) {
    Runner r{config, {}};
    const double tol = config.tolerance;

    r.criterion(1, "continued-fraction golden values and round trip", [&](std::ostream& d) {
        auto start = clock::now();
        bool ok = cf_expand(Slope::of(2, 9)).terms == std::vector<i64>{4, 2};
        ok = ok && cf_expand(Slope::of(9, 56)).terms == std::vector<i64>{6, 4, 2};
        i64 checked = 0;
        for (i64 p = 2; p <= 200 && ok; ++p)
            for (i64 q = 1; q < p && ok; ++q) {
                if (gcd_nonneg(q, p) != 1) continue;
                ok = cf_eval(cf_expand(Slope::of(q, p))) == Slope::of(q, p);
                ++checked;
            }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        d << checked << " round trips in " << secs << " s";
        return ok && secs < 1.0;
    });

    r.criterion(2, "Riley-family membership", [&](std::ostream& d) {
        auto start = clock::now();
        const HeckoidIndex m4 = HeckoidIndex::from_two_n(4);
        const Slope r23 = Slope::of(2, 3);
        bool ok = riley_family(3, 1, 2, 4, 1) == Slope::of(25, 36);
        MembershipVerdict v1 =
            is_in_orbit(Slope::of(25, 36), r23, m4, r.capped(2, 500, 1, 1));
        ok = ok && v1.is_member() && v1.witness.has_value();
        ok = ok && riley_family(3, 1, 4, 4, 1) == Slope::of(217, 324);
        MembershipVerdict v2 =
            is_in_orbit(Slope::of(217, 324), r23, m4, r.capped(4, 500, 1, 9));
        ok = ok && v2.is_member() && v2.witness.has_value();
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        d << "verdicts: " << (v1.is_member() ? "member" : "not_found") << ", "
          << (v2.is_member() ? "member" : "not_found") << "; " << secs << " s";
        return ok && secs < 10.0;
    });

    r.criterion(3, "pattern/BFS oracle agreement", [&](std::ostream& d) {
        auto start = clock::now();
        bool ok = true;
        i64 total = 0;
        for (const auto& [slope_r, m] : oracle_pairs()) {
            HeckoidIndex idx = HeckoidIndex::from_two_n(m);
            OrbitMap pattern = orbit_enumerate_pattern(slope_r, idx, std::min<i64>(2, config.budget.t_max),
                                                       std::min<i64>(3, config.budget.c_bound));
            OrbitMap bfs = orbit_bfs(slope_r, idx, std::min<i64>(8, config.budget.max_word_len),
                                     std::min<i64>(500, config.budget.max_den));
            for (const auto& [s, w] : pattern) {
                if (!s.is_infinite() && s.den > 500) continue;
                ++total;
                if (!bfs.count(s)) {
                    ok = false;
                    d << "missing " << format_slope(s) << " for r=" << format_slope(slope_r)
                      << " m=" << m << "; ";
                }
            }
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        d << total << " containments in " << secs << " s";
        return ok && secs < 120.0;
    });

    r.criterion(4, "word golden vectors", [&](std::ostream& d) {
        bool ok = slope_word(Slope::integer(0)).str() == "ab";
        ok = ok && slope_word(Slope::integer(1)).str() == "aB";
        ok = ok && slope_word(Slope::of(1, 2)).str() == "abAB";
        ok = ok && slope_word(Slope::of(1, 3)).str() == "abaBAB";
        d << "ab, aB, abAB, abaBAB";
        return ok;
    });

    r.criterion(5, "epimorphism certification", [&](std::ostream& d) {
        auto start = clock::now();
        bool ok = true;
        const SearchBudget budget = r.capped(8, 500, 2, 9);
        for (const auto& [s, slope_r, m] :
             {std::tuple{Slope::of(13, 36), Slope::of(1, 3), i64{4}},
              std::tuple{Slope::of(25, 36), Slope::of(2, 3), i64{4}}}) {
            if (slope_word(s).size() != 72) ok = false;
            EpiCertification cert =
                certify_epimorphism(s, slope_r, HeckoidIndex::from_two_n(m), budget, tol);
            ok = ok && cert.cert.all_pass && !cert.cert.reports.empty();
            double worst = 0.0;
            for (const auto& rep : cert.cert.reports)
                for (const auto& c : rep.checks) worst = std::max(worst, c.residual);
            d << format_slope(s) << ": worst residual " << worst << "; ";
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        d << secs << " s";
        return ok && secs < 5.0;
    });

    r.criterion(6, "conjugacy-class collapse (trace equality)", [&](std::ostream& d) {
        const SearchBudget budget = r.capped(8, 500, 2, 9);
        const Slope s = Slope::of(13, 36);
        const Slope sp1 = s.reflected_about(1);           // 2 − 13/36 = 59/36
        const Slope sp2 = s.negated().plus_integer(2);    // −13/36 + 2 = 59/36
        bool ok = sp1 == Slope::of(59, 36) && sp2 == Slope::of(59, 36);
        double worst = 0.0;
        for (const Slope& other : {sp1, sp2}) {
            Certification cert = trace_invariance_check(s, other, Slope::of(1, 3),
                                                        HeckoidIndex::from_two_n(4), budget, tol);
            ok = ok && cert.all_pass && !cert.reports.empty();
            for (const auto& rep : cert.reports)
                for (const auto& c : rep.checks) worst = std::max(worst, c.residual);
        }
        d << "pairs (13/36, 59/36) x2; worst residual " << worst;
        return ok;
    });

    r.criterion(7, "divisibility shadow with negative control", [&](std::ostream& d) {
        const SearchBudget budget = r.capped(8, 500, 2, 9);
        bool ok = true;
        for (const auto& [slope_r, m] : oracle_pairs()) {
            HeckoidIndex idx = HeckoidIndex::from_two_n(m);
            OrbitMap pattern = orbit_enumerate_pattern(slope_r, idx, std::min<i64>(2, config.budget.t_max),
                                                       std::min<i64>(3, config.budget.c_bound));
            // Sweep orbit slopes by denominator until five certify. For odd m
            // the trace condition only collapses the integer-index suborbit
            // (powers of the squared 2n-unit parabolic), so certified and
            // uncertified orbit slopes both exist; the criterion asks for
            // five certified ones.
            std::vector<Slope> candidates;
            for (const auto& [s, w] : pattern)
                if (!s.is_infinite() && s.den <= 500) candidates.push_back(s);
            std::sort(candidates.begin(), candidates.end(), [](const Slope& a, const Slope& b) {
                i64 na = a.num < 0 ? -a.num : a.num, nb = b.num < 0 ? -b.num : b.num;
                return std::tuple(a.den, na, a.num) < std::tuple(b.den, nb, b.num);
            });
            int certified = 0, tried = 0;
            for (const Slope& s : candidates) {
                if (++tried > 120) break;
                DivisibilityResult res = divisibility_check(s, slope_r, idx, budget, tol);
                if (res.all_pass && ++certified >= 5) break;
            }
            d << format_slope(slope_r) << " m=" << m << ": " << certified << "/" << tried
              << " tried; ";
            if (certified < 5) ok = false;
        }
        DivisibilityResult control = divisibility_check(Slope::of(1, 3), Slope::of(2, 3),
                                                        HeckoidIndex::from_two_n(4), budget, tol);
        bool control_failed = !control.all_pass;
        d << "negative control " << (control_failed ? "fails as expected" : "PASSED unexpectedly");
        return ok && control_failed;
    });

    r.criterion(8, "elliptic order at heckoid roots", [&](std::ostream& d) {
        bool ok = true;
        for (const auto& [slope_r, m] : oracle_pairs()) {
            Certification cert =
                elliptic_order_check(slope_r, HeckoidIndex::from_two_n(m), tol, 1e-3);
            ok = ok && cert.all_pass && !cert.reports.empty();
        }
        d << "checked (r,m) pairs: 4";
        return ok;
    });

    r.criterion(9, "odd-orbifold slope formulas and vertex condition", [&](std::ostream& d) {
        bool ok = odd_orbifold_base_slope(Slope::of(2, 9)) == Slope::of(1, 9);
        ok = ok && odd_orbifold_base_slope(Slope::of(9, 56)) == Slope::of(9, 28);
        ok = ok && odd_orbifold_base_slope(Slope::of(1, 3)) == Slope::of(2, 3);
        int emitted = 0;
        for (i64 m : {3, 5, 7}) {
            HeckoidIndex idx = HeckoidIndex::from_two_n(m);
            for (i64 p = 2; p <= 30; ++p)
                for (i64 q = 1; q < p; ++q) {
                    if (gcd_nonneg(q, p) != 1) continue;
                    Slope rr = Slope::of(q, p);
                    ok = ok && odd_orbifold_desc(rr, idx).vertex_condition_ok();
                    ok = ok && quotient_orbifold_desc(rr, idx).vertex_condition_ok();
                    emitted += 2;
                }
        }
        d << emitted << " descriptors checked";
        return ok;
    });

    r.criterion(10, "parity and exit-code contracts", [&](std::ostream& d) {
        bool ok = true;
        auto expect_throw = [&](auto&& fn, const char* what) {
            try {
                fn();
                ok = false;
                d << "missing error: " << what << "; ";
            } catch (const std::domain_error&) {
            }
        };
        expect_throw([&] { heckoid_presentation(Slope::of(1, 3), HeckoidIndex::from_two_n(5)); },
                     "heckoid_presentation odd index");
        expect_throw([&] { even_orbifold_desc(Slope::of(2, 9), HeckoidIndex::from_two_n(5)); },
                     "even descriptor odd index");
        expect_throw([&] { odd_orbifold_desc(Slope::of(2, 9), HeckoidIndex::from_two_n(4)); },
                     "odd descriptor even index");
        heckoid_presentation(Slope::of(1, 3), HeckoidIndex::from_two_n(4));

        auto exit_code = [&](std::vector<std::string> args) {
            std::ostringstream out, err;
            return run_cli(args, out, err);
        };
        struct Case {
            std::vector<std::string> args;
            int expected;
        };
        const std::vector<Case> cases = {
            {{"member", "--s", "25/36", "--r", "2/3", "--n", "2"}, 0},
            {{"present", "--r", "1/3", "--n", "5/2"}, 2},
            {{"present", "--r", "1/3", "--n", "2"}, 0},
            {{"member", "--s", "1/3", "--r", "2/3", "--n", "2", "--max-word-len", "2",
              "--t-max", "1", "--c-bound", "1"}, 1},
            {{"word", "--s", "1/3"}, 0},
            {{"word", "--s", "inf"}, 2},
            {{"member", "--s", "junk", "--r", "2/3", "--n", "2"}, 2},
            {{"divides", "--s", "1/3", "--r", "2/3", "--n", "2"}, 1},
            {{"describe", "--r", "2/9", "--n", "3/2"}, 0},
            {{"riley", "--alpha", "3", "--beta", "1", "--d", "2", "--m", "4", "--e", "2"}, 2},
            {{"nonsense-subcommand"}, 2},
        };
        for (const Case& c : cases) {
            int got = exit_code(c.args);
            if (got != c.expected) {
                ok = false;
                d << "exit(" << c.args[0] << ") = " << got << " expected " << c.expected << "; ";
            }
        }
        std::ostringstream out, err;
        run_cli({"word", "--s", "1/3"}, out, err);
        if (out.str().find("abaBAB") == std::string::npos) {
            ok = false;
            d << "word output missing abaBAB; ";
        }
        d << cases.size() << " exit-code cases";
        return ok;
    });

    return r.outcomes;
}

bool all_pass(const std::vector<CriterionOutcome>& outcomes) {
    for (const auto& o : outcomes)
        if (!o.pass) return false;
    return true;
}

void print_outcomes(const std::vector<CriterionOutcome>& outcomes, std::ostream& out) {
    for (const auto& o : outcomes)
        out << (o.pass ? "PASS" : "FAIL") << " criterion " << o.number << ": " << o.name << " ("
            << o.detail << ")\n";
    out << (all_pass(outcomes) ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
}

json outcomes_to_json(const std::vector<CriterionOutcome>& outcomes) {
    json arr = json::array();
    for (const auto& o : outcomes) {
        json j;
        j["number"] = o.number;
        j["name"] = o.name;
        j["pass"] = o.pass;
        j["detail"] = o.detail;
        j["seconds"] = o.seconds;
        arr.push_back(j);
    }
    json root;
    root["criteria"] = arr;
    root["all_pass"] = all_pass(outcomes);
    return root;
}

}  // namespace heckoid
