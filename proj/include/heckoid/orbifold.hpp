#pragma once

#include <array>
#include <vector>

#include "heckoid/index.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

struct wrong_parity_error : std::domain_error {
    explicit wrong_parity_error(const std::string& msg) : std::domain_error(msg) {}
};

enum class EdgeLabel { J, J1, J2, tau_plus, tau_minus, link_component };

struct EdgeWeight {
    bool infinite = false;
    i64 value = 0;  // ≥ 2 when finite

    static EdgeWeight inf() { return EdgeWeight{true, 0}; }
    static EdgeWeight finite(i64 v) { return EdgeWeight{false, v}; }

    friend bool operator==(const EdgeWeight&, const EdgeWeight&) = default;
};

struct OrbifoldEdge {
    int id = 0;
    EdgeLabel label = EdgeLabel::J;
    EdgeWeight weight;
};

enum class OrbifoldCase { even_heckoid, quotient, odd_knot, odd_link };

// Weighted-graph data of a 3-orbifold: a trivalent graph in S³ with edge
// weights in {2, m, ∞}. Edges of weight ∞ are drilled; finite weights index
// the singular strata. Combinatorial data only, no embedding.
struct OrbifoldDescriptor {
    Slope base_link_slope;
    std::vector<OrbifoldEdge> edges;
    std::vector<std::array<int, 3>> vertices;  // edge ids at each trivalent vertex
    OrbifoldCase kind = OrbifoldCase::even_heckoid;
    int strata_count = 0;  // 1-dimensional singular strata

    // At each trivalent vertex either some weight is ∞ or the reciprocals of
    // the three weights sum to more than 1.
    bool vertex_condition_ok() const;
};

// Even Heckoid orbifold of index n = two_n/2: base link of slope r with the
// lower tunnel as singular set of index n.
OrbifoldDescriptor even_orbifold_desc(const Slope& r, HeckoidIndex idx);

// Quotient orbifold: base link of slope r plus both tunnels, weights
// τ+ ↦ 2, τ− ↦ m, one link edge J ↦ ∞ and the remaining three ↦ 2.
OrbifoldDescriptor quotient_orbifold_desc(const Slope& r, HeckoidIndex idx);

// Odd Heckoid orbifold (half-integer index): base link changes slope to
//   r̂ = (q/2)/p or ((p+q)/2)/p   (p odd, by parity of q)
//   r̂ = q/(p/2)                   (p even)
// with the weight pattern of the corresponding case.
OrbifoldDescriptor odd_orbifold_desc(const Slope& r, HeckoidIndex idx);

// The slope change r → r̂ of the odd case alone.
Slope odd_orbifold_base_slope(const Slope& r);

}  // namespace heckoid
