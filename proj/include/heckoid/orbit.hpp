#pragma once

#include <map>
#include <optional>
#include <vector>

#include "heckoid/contfrac.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/index.hpp"

namespace heckoid {

// One step of an orbit word. Steps carry exponents ("p^9" is one step), so a
// witness is a sequence of generator labels with exponents:
//   refl0      x ↦ −x
//   refl1      x ↦ 2 − x
//   translate  x ↦ x + 2·exp            (exp = ±1 per step)
//   parabolic  x ↦ parabolic_power(r, exp·m)(x)   (exp any nonzero integer)
enum class MoveKind : unsigned char { refl0, refl1, translate, parabolic };

struct Move {
    MoveKind kind = MoveKind::refl0;
    i64 exp = 1;

    friend bool operator==(const Move&, const Move&) = default;
};

Slope apply_move(const Slope& x, const Move& mv, const Slope& r, HeckoidIndex idx,
                 ParabolicDirection dir = ParabolicDirection::clockwise);
Slope apply_moves(const std::vector<Move>& word, const Slope& r, HeckoidIndex idx,
                  Slope start = Slope::infinity(),
                  ParabolicDirection dir = ParabolicDirection::clockwise);

// Parameters (t, c, ε1..εt, c1..c_{2t−1}) of the orbit pattern
//   s = 2c + [ε1·a, m·c1, −ε1·a⁻¹, 2c2, ..., εt·a, m·c_{2t−1}, −εt·a⁻¹]
// where a = cf_expand(r).
struct PatternParams {
    i64 t = 1;
    i64 c = 0;
    std::vector<int> eps;  // ±1, size t
    std::vector<i64> cs;   // size 2t−1

    friend bool operator==(const PatternParams&, const PatternParams&) = default;
};

ContFrac assemble_pattern(const ContFrac& a, HeckoidIndex idx, const PatternParams& p);

struct OrbitWitness {
    Slope slope;
    std::optional<std::vector<Move>> word;
    std::optional<PatternParams> pattern;
    std::optional<ContFrac> pattern_contfrac;  // the assembled expansion
};

using OrbitMap = std::map<Slope, OrbitWitness>;

// Independent oracle for the orbit of ∞ under the group generated by the
// reflections at ∞ and the 2n-unit parabolic at r. BFS over moves (see Move);
// prunes children whose denominator exceeds max_den; each slope carries a
// minimal-length witness; output is deterministic and canonically ordered.
OrbitMap orbit_bfs(const Slope& r, HeckoidIndex idx, i64 max_word_len, i64 max_den,
                   ParabolicDirection dir = ParabolicDirection::clockwise);

// Enumerates the pattern over all t ≤ t_max, |c|,|ci| ≤ c_bound and all sign
// vectors; returns reduced slopes with their first parameter witness in
// enumeration order.
OrbitMap orbit_enumerate_pattern(const Slope& r, HeckoidIndex idx, i64 t_max, i64 c_bound);

struct SearchBudget {
    i64 max_word_len = 8;
    i64 max_den = 500;
    i64 t_max = 2;
    i64 c_bound = 9;
};

enum class Membership { member, not_found_within_budget };

struct MembershipVerdict {
    Membership verdict = Membership::not_found_within_budget;
    std::optional<OrbitWitness> witness;

    bool is_member() const { return verdict == Membership::member; }
};

// Budgeted semi-decision: positive answers always carry a verifiable witness
// (pattern parameters or a generator word); negative answers are only
// relative to the budget.
MembershipVerdict is_in_orbit(const Slope& s, const Slope& r, HeckoidIndex idx,
                              const SearchBudget& budget);

enum class EpiRoute { via_s, via_s_plus_one };

struct EpiVerdict {
    Membership verdict = Membership::not_found_within_budget;
    std::optional<EpiRoute> route;
    std::optional<OrbitWitness> witness;

    bool is_member() const { return verdict == Membership::member; }
};

// Tests whether s or s+1 lies in the orbit of ∞; either hypothesis yields an
// upper-meridian-pair-preserving epimorphism from the link group of slope s
// onto the Heckoid group of (r; n).
EpiVerdict admits_epimorphism(const Slope& s, const Slope& r, HeckoidIndex idx,
                              const SearchBudget& budget);

// Riley's family: the slope β*/α* with α* = α^d·m, β* = α^{d−1}·m·(α−β) + e.
Slope riley_family(i64 alpha, i64 beta, i64 d, i64 m, i64 e);

}  // namespace heckoid
