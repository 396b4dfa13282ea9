#include "heckoid/orbifold.hpp"

namespace heckoid {

bool OrbifoldDescriptor::vertex_condition_ok() const {
    for (const auto& v : vertices) {
        bool has_inf = false;
        double recip = 0.0;
        for (int id : v) {
            const EdgeWeight& w = edges[static_cast<std::size_t>(id)].weight;
            if (w.infinite)
                has_inf = true;
            else
                recip += 1.0 / static_cast<double>(w.value);
        }
        if (!has_inf && !(recip > 1.0)) return false;
    }
    return true;
}

namespace {

void require_unit_interval(const Slope& r) {
    if (!r.in_unit_interval())
        throw std::domain_error("orbifold descriptors require 0 < r < 1");
}

int count_strata(const OrbifoldDescriptor& d) {
    int n = 0;
    for (const auto& e : d.edges)
        if (!e.weight.infinite) ++n;
    return n;
}

int add_edge(OrbifoldDescriptor& d, EdgeLabel label, EdgeWeight w) {
    int id = static_cast<int>(d.edges.size());
    d.edges.push_back(OrbifoldEdge{id, label, w});
    return id;
}

}  // namespace

OrbifoldDescriptor even_orbifold_desc(const Slope& r, HeckoidIndex idx) {
    require_unit_interval(r);
    if (!idx.is_even())
        throw wrong_parity_error("even orbifold requires an integer index (even 2n)");
    OrbifoldDescriptor d;
    d.base_link_slope = r;
    d.kind = OrbifoldCase::even_heckoid;

    int tau = add_edge(d, EdgeLabel::tau_minus, EdgeWeight::finite(idx.integer_n()));
    if (r.den % 2 == 1) {
        // Knot: the two tunnel endpoints split it into two drilled edges.
        int e1 = add_edge(d, EdgeLabel::link_component, EdgeWeight::inf());
        int e2 = add_edge(d, EdgeLabel::link_component, EdgeWeight::inf());
        d.vertices.push_back({e1, e2, tau});
        d.vertices.push_back({e1, e2, tau});
    } else {
        // Two components; the lower tunnel joins them, one endpoint each.
        int c1 = add_edge(d, EdgeLabel::link_component, EdgeWeight::inf());
        int c2 = add_edge(d, EdgeLabel::link_component, EdgeWeight::inf());
        d.vertices.push_back({c1, c1, tau});
        d.vertices.push_back({c2, c2, tau});
    }
    d.strata_count = count_strata(d);
    return d;
}

OrbifoldDescriptor quotient_orbifold_desc(const Slope& r, HeckoidIndex idx) {
    require_unit_interval(r);
    OrbifoldDescriptor d;
    d.base_link_slope = r;
    d.kind = OrbifoldCase::quotient;

    int tau_p = add_edge(d, EdgeLabel::tau_plus, EdgeWeight::finite(2));
    int tau_m = add_edge(d, EdgeLabel::tau_minus, EdgeWeight::finite(idx.m()));
    // The four tunnel endpoints cut the link into four edges, each running
    // from an upper-tunnel vertex to a lower-tunnel vertex. One of them (J)
    // is drilled; the remaining three get weight 2.
    int j = add_edge(d, EdgeLabel::J, EdgeWeight::inf());
    int e2 = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
    int e3 = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
    int e4 = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
    d.vertices.push_back({j, e2, tau_p});
    d.vertices.push_back({e3, e4, tau_p});
    d.vertices.push_back({j, e3, tau_m});
    d.vertices.push_back({e2, e4, tau_m});
    d.strata_count = count_strata(d);
    return d;
}

Slope odd_orbifold_base_slope(const Slope& r) {
    const i64 q = r.num, p = r.den;
    if (p % 2 == 1) {
        if (q % 2 == 0) return Slope::of(q / 2, p);
        return Slope::of((p + q) / 2, p);
    }
    return Slope::of(q, p / 2);
}

OrbifoldDescriptor odd_orbifold_desc(const Slope& r, HeckoidIndex idx) {
    require_unit_interval(r);
    if (idx.is_even())
        throw wrong_parity_error("odd orbifold requires a half-integer index (odd 2n)");
    OrbifoldDescriptor d;
    d.base_link_slope = odd_orbifold_base_slope(r);
    const i64 m = idx.m();

    if (r.den % 2 == 1) {
        d.kind = OrbifoldCase::odd_knot;
        int tau = add_edge(d, EdgeLabel::tau_minus, EdgeWeight::finite(m));
        int j1 = add_edge(d, EdgeLabel::J1, EdgeWeight::inf());
        int j2 = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
        d.vertices.push_back({j1, j2, tau});
        d.vertices.push_back({j1, j2, tau});
    } else {
        d.kind = OrbifoldCase::odd_link;
        int tau_p = add_edge(d, EdgeLabel::tau_plus, EdgeWeight::finite(2));
        int tau_m = add_edge(d, EdgeLabel::tau_minus, EdgeWeight::finite(m));
        int j1a = add_edge(d, EdgeLabel::J1, EdgeWeight::inf());
        int j1b = add_edge(d, EdgeLabel::J1, EdgeWeight::inf());
        int j2a = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
        int j2b = add_edge(d, EdgeLabel::J2, EdgeWeight::finite(2));
        d.vertices.push_back({j1a, j2a, tau_p});
        d.vertices.push_back({j1b, j2b, tau_p});
        d.vertices.push_back({j1a, j2b, tau_m});
        d.vertices.push_back({j1b, j2a, tau_m});
    }
    d.strata_count = count_strata(d);
    return d;
}

}  // namespace heckoid
