#include "heckoid/textio.hpp"

#include <charconv>
#include <sstream>

namespace heckoid {

namespace {

i64 parse_i64(const std::string& text) {
    i64 value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::domain_error("malformed integer '" + text + "'");
    return value;
}

}  // namespace

std::string format_slope(const Slope& s) {
    if (s.is_infinite()) return "inf";
    if (s.den == 1) return std::to_string(s.num);
    return std::to_string(s.num) + "/" + std::to_string(s.den);
}

Slope parse_slope(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return Slope::infinity();
    auto slash = text.find('/');
    if (slash == std::string::npos) return Slope::integer(parse_i64(text));
    i64 num = parse_i64(text.substr(0, slash));
    i64 den = parse_i64(text.substr(slash + 1));
    if (den == 0) throw std::domain_error("slope denominator must be nonzero; use 'inf'");
    return Slope::of(num, den);
}

std::string format_index(HeckoidIndex idx) {
    if (idx.is_even()) return std::to_string(idx.two_n / 2);
    return std::to_string(idx.two_n) + "/2";
}

HeckoidIndex parse_index_n(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        i64 num = parse_i64(text.substr(0, slash));
        i64 den = parse_i64(text.substr(slash + 1));
        if (den == 1) return HeckoidIndex::from_integer_n(num);
        if (den == 2) return HeckoidIndex::from_two_n(num);
        throw std::domain_error("index n must be an integer or a half-integer");
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        i64 whole = parse_i64(text.substr(0, dot));
        if (frac == "5") return HeckoidIndex::from_two_n(2 * whole + (whole < 0 ? -1 : 1));
        if (frac == "0" || frac.empty()) return HeckoidIndex::from_integer_n(whole);
        throw std::domain_error("index n accepts exact halves only (e.g. 2.5)");
    }
    return HeckoidIndex::from_integer_n(parse_i64(text));
}

std::string format_contfrac(const ContFrac& f) {
    std::ostringstream out;
    if (f.whole != 0) out << f.whole << "+";
    out << "[";
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out << ",";
        out << f.terms[i];
    }
    out << "]";
    return out.str();
}

ContFrac parse_contfrac(const std::string& text) {
    ContFrac f;
    std::string body = text;
    auto open = text.find('[');
    if (open == std::string::npos || text.back() != ']')
        throw std::domain_error("malformed continued fraction '" + text + "'");
    if (open > 0) {
        if (text[open - 1] != '+')
            throw std::domain_error("malformed continued fraction '" + text + "'");
        f.whole = parse_i64(text.substr(0, open - 1));
    }
    body = text.substr(open + 1, text.size() - open - 2);
    if (!body.empty()) {
        std::istringstream in(body);
        std::string item;
        while (std::getline(in, item, ',')) f.terms.push_back(parse_i64(item));
    }
    return f;
}

std::string format_move(const Move& mv) {
    switch (mv.kind) {
        case MoveKind::refl0: return "r0";
        case MoveKind::refl1: return "r1";
        case MoveKind::translate: return mv.exp >= 0 ? "t+" : "t-";
        case MoveKind::parabolic: return "p^" + std::to_string(mv.exp);
    }
    return "?";
}

Move parse_move(const std::string& text) {
    if (text == "r0") return Move{MoveKind::refl0, 1};
    if (text == "r1") return Move{MoveKind::refl1, 1};
    if (text == "t+") return Move{MoveKind::translate, 1};
    if (text == "t-") return Move{MoveKind::translate, -1};
    if (text.rfind("p^", 0) == 0) return Move{MoveKind::parabolic, parse_i64(text.substr(2))};
    throw std::domain_error("malformed move '" + text + "'");
}

std::string format_word_moves(const std::vector<Move>& word) {
    std::string out;
    for (const Move& mv : word) {
        if (!out.empty()) out += " ";
        out += format_move(mv);
    }
    return out;
}

json slope_to_json(const Slope& s) { return format_slope(s); }
Slope slope_from_json(const json& j) { return parse_slope(j.get<std::string>()); }

json witness_to_json(const OrbitWitness& w) {
    json j;
    j["slope"] = format_slope(w.slope);
    if (w.word) {
        json arr = json::array();
        for (const Move& mv : *w.word) arr.push_back(format_move(mv));
        j["word"] = arr;
    }
    if (w.pattern) {
        json p;
        p["t"] = w.pattern->t;
        p["c"] = w.pattern->c;
        p["eps"] = w.pattern->eps;
        p["cs"] = w.pattern->cs;
        j["pattern"] = p;
    }
    if (w.pattern_contfrac) j["contfrac"] = format_contfrac(*w.pattern_contfrac);
    return j;
}

OrbitWitness witness_from_json(const json& j) {
    OrbitWitness w;
    w.slope = parse_slope(j.at("slope").get<std::string>());
    if (j.contains("word")) {
        std::vector<Move> word;
        for (const auto& item : j.at("word")) word.push_back(parse_move(item.get<std::string>()));
        w.word = std::move(word);
    }
    if (j.contains("pattern")) {
        PatternParams p;
        const json& jp = j.at("pattern");
        p.t = jp.at("t").get<i64>();
        p.c = jp.at("c").get<i64>();
        p.eps = jp.at("eps").get<std::vector<int>>();
        p.cs = jp.at("cs").get<std::vector<i64>>();
        w.pattern = std::move(p);
    }
    if (j.contains("contfrac")) w.pattern_contfrac = parse_contfrac(j.at("contfrac").get<std::string>());
    return w;
}

json membership_to_json(const Slope& s, const Slope& r, HeckoidIndex idx,
                        const MembershipVerdict& v) {
    json j;
    j["s"] = format_slope(s);
    j["r"] = format_slope(r);
    j["n"] = format_index(idx);
    j["verdict"] = v.is_member() ? "member" : "not_found_within_budget";
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

json epi_to_json(const Slope& s, const Slope& r, HeckoidIndex idx, const EpiVerdict& v) {
    json j;
    j["s"] = format_slope(s);
    j["r"] = format_slope(r);
    j["n"] = format_index(idx);
    if (v.is_member()) {
        j["verdict"] = "yes";
        j["via"] = v.route == EpiRoute::via_s ? "s" : "s+1";
        if (v.witness) j["witness"] = witness_to_json(*v.witness);
    } else {
        j["verdict"] = "not_found_within_budget";
    }
    return j;
}

json orbit_to_json(const Slope& r, HeckoidIndex idx, const OrbitMap& orbit) {
    json j;
    j["r"] = format_slope(r);
    j["n"] = format_index(idx);
    json arr = json::array();
    for (const auto& [slope, witness] : orbit) arr.push_back(witness_to_json(witness));
    j["slopes"] = arr;
    return j;
}

json presentation_to_json(const Presentation& p) {
    json j;
    j["generators"] = p.generators;
    json rel = json::array();
    for (const GroupWord& w : p.relators) rel.push_back(w.str());
    j["relators"] = rel;
    return j;
}

Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    p.relators.clear();
    for (const auto& item : j.at("relators")) p.relators.push_back(GroupWord::parse(item.get<std::string>()));
    return p;
}

json certification_to_json(const Certification& cert) {
    json j;
    j["context"] = cert.context;
    j["verdict"] = cert.all_pass ? "pass" : "fail";
    json reports = json::array();
    for (const CertificationReport& r : cert.reports) {
        json jr;
        jr["root"] = {r.root.real(), r.root.imag()};
        jr["pass"] = r.pass;
        json checks = json::array();
        for (const CheckResult& c : r.checks) {
            json jc;
            jc["name"] = c.name;
            jc["residual"] = c.residual;
            jc["tolerance"] = c.tolerance;
            jc["pass"] = c.pass;
            if (c.matched_sign != 0) jc["sign"] = c.matched_sign;
            checks.push_back(jc);
        }
        jr["checks"] = checks;
        reports.push_back(jr);
    }
    j["reports"] = reports;
    return j;
}

Certification certification_from_json(const json& j) {
    Certification cert;
    cert.context = j.at("context").get<std::string>();
    cert.all_pass = j.at("verdict").get<std::string>() == "pass";
    for (const auto& jr : j.at("reports")) {
        CertificationReport r;
        r.root = {jr.at("root")[0].get<double>(), jr.at("root")[1].get<double>()};
        r.pass = jr.at("pass").get<bool>();
        for (const auto& jc : jr.at("checks")) {
            CheckResult c;
            c.name = jc.at("name").get<std::string>();
            c.residual = jc.at("residual").get<double>();
            c.tolerance = jc.at("tolerance").get<double>();
            c.pass = jc.at("pass").get<bool>();
            c.matched_sign = jc.contains("sign") ? jc.at("sign").get<int>() : 0;
            r.checks.push_back(c);
        }
        cert.reports.push_back(r);
    }
    return cert;
}

std::string edge_label_name(EdgeLabel label) {
    switch (label) {
        case EdgeLabel::J: return "J";
        case EdgeLabel::J1: return "J1";
        case EdgeLabel::J2: return "J2";
        case EdgeLabel::tau_plus: return "tau_plus";
        case EdgeLabel::tau_minus: return "tau_minus";
        case EdgeLabel::link_component: return "link_component";
    }
    return "?";
}

EdgeLabel edge_label_from_name(const std::string& name) {
    if (name == "J") return EdgeLabel::J;
    if (name == "J1") return EdgeLabel::J1;
    if (name == "J2") return EdgeLabel::J2;
    if (name == "tau_plus") return EdgeLabel::tau_plus;
    if (name == "tau_minus") return EdgeLabel::tau_minus;
    if (name == "link_component") return EdgeLabel::link_component;
    throw std::domain_error("unknown edge label '" + name + "'");
}

std::string orbifold_case_name(OrbifoldCase c) {
    switch (c) {
        case OrbifoldCase::even_heckoid: return "even";
        case OrbifoldCase::quotient: return "quotient";
        case OrbifoldCase::odd_knot: return "odd_knot";
        case OrbifoldCase::odd_link: return "odd_link";
    }
    return "?";
}

OrbifoldCase orbifold_case_from_name(const std::string& name) {
    if (name == "even") return OrbifoldCase::even_heckoid;
    if (name == "quotient") return OrbifoldCase::quotient;
    if (name == "odd_knot") return OrbifoldCase::odd_knot;
    if (name == "odd_link") return OrbifoldCase::odd_link;
    throw std::domain_error("unknown orbifold case '" + name + "'");
}

json descriptor_to_json(const OrbifoldDescriptor& d) {
    json j;
    j["base_slope"] = format_slope(d.base_link_slope);
    json edges = json::array();
    for (const OrbifoldEdge& e : d.edges) {
        json je;
        je["label"] = edge_label_name(e.label);
        if (e.weight.infinite)
            je["weight"] = "inf";
        else
            je["weight"] = e.weight.value;
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["case"] = orbifold_case_name(d.kind);
    j["strata_count"] = d.strata_count;
    return j;
}

OrbifoldDescriptor descriptor_from_json(const json& j) {
    OrbifoldDescriptor d;
    d.base_link_slope = parse_slope(j.at("base_slope").get<std::string>());
    int id = 0;
    for (const auto& je : j.at("edges")) {
        OrbifoldEdge e;
        e.id = id++;
        e.label = edge_label_from_name(je.at("label").get<std::string>());
        if (je.at("weight").is_string())
            e.weight = EdgeWeight::inf();
        else
            e.weight = EdgeWeight::finite(je.at("weight").get<i64>());
        d.edges.push_back(e);
    }
    d.kind = orbifold_case_from_name(j.at("case").get<std::string>());
    d.strata_count = j.at("strata_count").get<int>();
    return d;
}

void RunConfig::validate() const {
    if (!(tolerance > 0.0) || !(tolerance < 1.0))
        throw std::domain_error("tolerance must lie in (0, 1)");
    if (budget.max_word_len < 1 || budget.max_den < 1 || budget.t_max < 1 || budget.c_bound < 1)
        throw std::domain_error("all search budgets must be positive");
}

}  // namespace heckoid
