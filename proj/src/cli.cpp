#include "heckoid/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "heckoid/acceptance.hpp"
#include "heckoid/certify.hpp"
#include "heckoid/orbifold.hpp"
#include "heckoid/textio.hpp"

namespace heckoid {

namespace {

struct CliOptions {
    std::string s_text, r_text, n_text, m_text;
    i64 alpha = 0, beta = 0, d = 0, riley_m = 0, e = 0;
    double tol = 1e-9;
    i64 k = 1;
    SearchBudget budget;
    bool json_mode = false;
    bool quotient = false;
};

Slope need_slope(const std::string& text, const char* flag) {
    if (text.empty()) throw std::domain_error(std::string("missing required flag ") + flag);
    return parse_slope(text);
}

HeckoidIndex need_index(const CliOptions& opt) {
    if (!opt.n_text.empty()) return parse_index_n(opt.n_text);
    if (!opt.m_text.empty()) return HeckoidIndex::from_two_n(std::stoll(opt.m_text));
    throw std::domain_error("missing required flag --n (or --m)");
}

void add_budget_flags(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--max-word-len", opt.budget.max_word_len, "orbit search word-length budget");
    cmd->add_option("--max-den", opt.budget.max_den, "orbit search denominator bound");
    cmd->add_option("--t-max", opt.budget.t_max, "pattern search t bound");
    cmd->add_option("--c-bound", opt.budget.c_bound, "pattern search coefficient bound");
}

void check_budget(const SearchBudget& b) {
    if (b.max_word_len < 1 || b.max_den < 1 || b.t_max < 1 || b.c_bound < 1)
        throw std::domain_error("all search budgets must be positive");
}

void emit(std::ostream& out, bool json_mode, const json& doc, const std::string& text) {
    if (json_mode)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

std::string render_witness(const OrbitWitness& w) {
    std::ostringstream out;
    if (w.word) {
        out << "word: " << (w.word->empty() ? "(empty)" : format_word_moves(*w.word));
    }
    if (w.pattern) {
        if (w.word) out << "; ";
        out << "pattern: t=" << w.pattern->t << " c=" << w.pattern->c << " eps=[";
        for (std::size_t i = 0; i < w.pattern->eps.size(); ++i)
            out << (i ? "," : "") << (w.pattern->eps[i] > 0 ? "+" : "-");
        out << "] cs=[";
        for (std::size_t i = 0; i < w.pattern->cs.size(); ++i)
            out << (i ? "," : "") << w.pattern->cs[i];
        out << "]";
        if (w.pattern_contfrac) out << " = " << format_contfrac(*w.pattern_contfrac);
    }
    return out.str();
}

std::string render_certification(const Certification& cert) {
    std::ostringstream out;
    for (const CertificationReport& r : cert.reports) {
        out << "root (" << r.root.real() << ", " << r.root.imag() << "):\n";
        for (const CheckResult& c : r.checks) {
            out << "  " << c.name << " residual " << c.residual << " tol " << c.tolerance << " "
                << (c.pass ? "pass" : "FAIL");
            if (c.matched_sign != 0) out << " sign " << (c.matched_sign > 0 ? "+I" : "-I");
            out << "\n";
        }
    }
    out << "verdict: " << (cert.all_pass ? "pass" : "fail") << "\n";
    return out.str();
}

int dispatch(const std::string& cmd, CliOptions& opt, std::ostream& out) {
    if (cmd == "orbit") {
        check_budget(opt.budget);
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        OrbitMap orbit = orbit_bfs(r, idx, opt.budget.max_word_len, opt.budget.max_den);
        std::ostringstream text;
        for (const auto& [slope, witness] : orbit)
            text << format_slope(slope) << "  " << render_witness(witness) << "\n";
        emit(out, opt.json_mode, orbit_to_json(r, idx, orbit), text.str());
        return 0;
    }
    if (cmd == "member") {
        check_budget(opt.budget);
        Slope s = need_slope(opt.s_text, "--s");
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        MembershipVerdict v = is_in_orbit(s, r, idx, opt.budget);
        std::ostringstream text;
        if (v.is_member())
            text << "member: " << render_witness(*v.witness) << "\n";
        else
            text << "not_found_within_budget\n";
        emit(out, opt.json_mode, membership_to_json(s, r, idx, v), text.str());
        return v.is_member() ? 0 : 1;
    }
    if (cmd == "epi") {
        check_budget(opt.budget);
        Slope s = need_slope(opt.s_text, "--s");
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        EpiVerdict v = admits_epimorphism(s, r, idx, opt.budget);
        std::ostringstream text;
        if (v.is_member())
            text << "yes via " << (v.route == EpiRoute::via_s ? "s" : "s+1") << ": "
                 << render_witness(*v.witness) << "\n";
        else
            text << "not_found_within_budget\n";
        emit(out, opt.json_mode, epi_to_json(s, r, idx, v), text.str());
        return v.is_member() ? 0 : 1;
    }
    if (cmd == "riley") {
        Slope s = riley_family(opt.alpha, opt.beta, opt.d, opt.riley_m, opt.e);
        json j;
        j["slope"] = format_slope(s);
        emit(out, opt.json_mode, j, format_slope(s) + "\n");
        return 0;
    }
    if (cmd == "word") {
        Slope s = need_slope(opt.s_text, "--s");
        GroupWord w = slope_word(s);
        json j;
        j["slope"] = format_slope(s);
        j["word"] = w.str();
        emit(out, opt.json_mode, j, w.str() + "\n");
        return 0;
    }
    if (cmd == "present") {
        Presentation pres;
        json j;
        if (!opt.r_text.empty() || !opt.n_text.empty() || !opt.m_text.empty()) {
            Slope r = need_slope(opt.r_text, "--r");
            HeckoidIndex idx = need_index(opt);
            pres = heckoid_presentation(r, idx);
            j["kind"] = "heckoid";
        } else {
            Slope s = need_slope(opt.s_text, "--s");
            pres = link_group_presentation(s);
            j["kind"] = "link_group";
        }
        json pj = presentation_to_json(pres);
        for (auto& [key, value] : pj.items()) j[key] = value;
        std::ostringstream text;
        text << "<a,b | ";
        for (std::size_t i = 0; i < pres.relators.size(); ++i)
            text << (i ? ", " : "") << pres.relators[i].str();
        text << ">\n";
        emit(out, opt.json_mode, j, text.str());
        return 0;
    }
    if (cmd == "certify") {
        RunConfig{opt.tol, opt.budget}.validate();
        Slope s = need_slope(opt.s_text, "--s");
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        EpiCertification cert = certify_epimorphism(s, r, idx, opt.budget, opt.tol, opt.k);
        json j = certification_to_json(cert.cert);
        j["via"] = cert.route.route == EpiRoute::via_s ? "s" : "s+1";
        emit(out, opt.json_mode, j, render_certification(cert.cert));
        return cert.cert.all_pass ? 0 : 1;
    }
    if (cmd == "divides") {
        RunConfig{opt.tol, opt.budget}.validate();
        Slope s = need_slope(opt.s_text, "--s");
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        DivisibilityResult res = divisibility_check(s, r, idx, opt.budget, opt.tol, opt.k);
        json j = certification_to_json(res.cert);
        j["membership"] = res.membership.is_member() ? "member" : "not_found_within_budget";
        j["verdict"] = res.all_pass ? "pass" : "fail";
        std::ostringstream text;
        text << "membership: "
             << (res.membership.is_member() ? "member" : "not_found_within_budget") << "\n"
             << render_certification(res.cert) << "overall: " << (res.all_pass ? "pass" : "fail")
             << "\n";
        emit(out, opt.json_mode, j, text.str());
        return res.all_pass ? 0 : 1;
    }
    if (cmd == "describe") {
        Slope r = need_slope(opt.r_text, "--r");
        HeckoidIndex idx = need_index(opt);
        OrbifoldDescriptor desc = opt.quotient ? quotient_orbifold_desc(r, idx)
                                : idx.is_even() ? even_orbifold_desc(r, idx)
                                                : odd_orbifold_desc(r, idx);
        std::ostringstream text;
        text << "case: " << orbifold_case_name(desc.kind) << "\n"
             << "base link slope: " << format_slope(desc.base_link_slope) << "\n";
        for (const OrbifoldEdge& e : desc.edges) {
            text << "  " << edge_label_name(e.label) << " -> ";
            if (e.weight.infinite)
                text << "inf";
            else
                text << e.weight.value;
            text << "\n";
        }
        text << "singular strata: " << desc.strata_count << "\n";
        emit(out, opt.json_mode, descriptor_to_json(desc), text.str());
        return 0;
    }
    if (cmd == "selftest") {
        check_budget(opt.budget);
        // Tolerance zero is allowed here as a diagnostic: certification
        // criteria then fail deterministically (residuals are nonzero).
        if (opt.tol < 0.0) throw std::domain_error("tolerance must be nonnegative");
        RunConfig config{opt.tol, opt.budget};
        std::vector<CriterionOutcome> outcomes = run_acceptance(config);
        std::ostringstream text;
        print_outcomes(outcomes, text);
        emit(out, opt.json_mode, outcomes_to_json(outcomes), text.str());
        return all_pass(outcomes) ? 0 : 1;
    }
    throw std::domain_error("unknown subcommand '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-bridge link and Heckoid group toolkit"};
    app.require_subcommand(1);
    CliOptions opt;
    app.add_flag("--json", opt.json_mode, "emit one JSON document on stdout");

    auto add_common = [&](CLI::App* cmd, bool with_s, bool with_rn, bool with_tol,
                          bool with_budget) {
        if (with_s) cmd->add_option("--s", opt.s_text, "slope s (q/p or inf)");
        if (with_rn) {
            cmd->add_option("--r", opt.r_text, "base slope r (q/p, 0 < r < 1)");
            cmd->add_option("--n", opt.n_text, "index n (integer or half-integer, e.g. 2 or 5/2)");
            cmd->add_option("--m", opt.m_text, "alias for --n via m = 2n");
        }
        if (with_tol) {
            cmd->add_option("--tol", opt.tol, "certification tolerance");
            cmd->add_option("--k", opt.k, "trace target choice, gcd(k, 2n) = 1");
        }
        if (with_budget) add_budget_flags(cmd, opt);
    };

    add_common(app.add_subcommand("orbit", "enumerate the orbit of infinity"), false, true,
               false, true);
    add_common(app.add_subcommand("member", "orbit membership with witness"), true, true, false,
               true);
    add_common(app.add_subcommand("epi", "epimorphism test: s or s+1 in the orbit"), true, true,
               false, true);
    {
        CLI::App* cmd = app.add_subcommand("riley", "slope of Riley's epimorphism family");
        cmd->add_option("--alpha", opt.alpha)->required();
        cmd->add_option("--beta", opt.beta)->required();
        cmd->add_option("--d", opt.d)->required();
        cmd->add_option("--m", opt.riley_m)->required();
        cmd->add_option("--e", opt.e)->required();
    }
    add_common(app.add_subcommand("word", "two-generator word of a slope"), true, false, false,
               false);
    add_common(app.add_subcommand("present", "link-group or Heckoid presentation"), true, true,
               false, false);
    add_common(app.add_subcommand("certify", "certify the epimorphism numerically"), true, true,
               true, true);
    add_common(app.add_subcommand("divides", "divisibility shadow at heckoid roots"), true, true,
               true, true);
    {
        CLI::App* cmd = app.add_subcommand("describe", "weighted-graph orbifold descriptor");
        add_common(cmd, false, true, false, false);
        cmd->add_flag("--quotient", opt.quotient, "describe the quotient orbifold instead");
    }
    {
        CLI::App* cmd = app.add_subcommand("selftest", "run the full acceptance suite");
        cmd->add_option("--tol", opt.tol, "certification tolerance");
        add_budget_flags(cmd, opt);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        if (opt.json_mode) {
            json j;
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), opt, out);
    } catch (const std::exception& e) {
        if (opt.json_mode) {
            json j;
            j["error"] = e.what();
            out << j.dump(2) << "\n";
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace heckoid
