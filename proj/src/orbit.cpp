#include "heckoid/orbit.hpp"

#include <deque>
#include <stdexcept>

namespace heckoid {

Slope apply_move(const Slope& x, const Move& mv, const Slope& r, HeckoidIndex idx,
                 ParabolicDirection dir) {
    switch (mv.kind) {
        case MoveKind::refl0:
            return x.negated();
        case MoveKind::refl1:
            return x.reflected_about(1);
        case MoveKind::translate:
            return x.plus_integer(checked_mul(2, mv.exp));
        case MoveKind::parabolic:
            return parabolic_power(r, checked_mul(mv.exp, idx.m()), dir).apply(x);
    }
    throw std::logic_error("unreachable move kind");
}

Slope apply_moves(const std::vector<Move>& word, const Slope& r, HeckoidIndex idx,
                  Slope start, ParabolicDirection dir) {
    Slope x = start;
    for (const Move& mv : word) x = apply_move(x, mv, r, idx, dir);
    return x;
}

ContFrac assemble_pattern(const ContFrac& a, HeckoidIndex idx, const PatternParams& p) {
    if (p.t < 1) throw std::domain_error("pattern requires t >= 1");
    if (static_cast<i64>(p.eps.size()) != p.t ||
        static_cast<i64>(p.cs.size()) != 2 * p.t - 1)
        throw std::domain_error("pattern parameter sizes do not match t");
    ContFrac out;
    out.whole = checked_mul(2, p.c);
    const i64 m = idx.m();
    for (i64 i = 1; i <= p.t; ++i) {
        int e = p.eps[static_cast<std::size_t>(i - 1)];
        if (i > 1) out.terms.push_back(checked_mul(2, p.cs[static_cast<std::size_t>(2 * i - 3)]));
        for (i64 term : a.terms) out.terms.push_back(checked_mul(e, term));
        out.terms.push_back(checked_mul(m, p.cs[static_cast<std::size_t>(2 * i - 2)]));
        for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it)
            out.terms.push_back(checked_mul(-e, *it));
    }
    return out;
}

namespace {

struct BfsNode {
    Slope slope;
    int parent = -1;
    Move via;
    i64 depth = 0;
};

void require_unit_interval(const Slope& r) {
    if (!r.in_unit_interval())
        throw std::domain_error("the base slope r must lie strictly between 0 and 1");
}

}  // namespace

OrbitMap orbit_bfs(const Slope& r, HeckoidIndex idx, i64 max_word_len, i64 max_den,
                   ParabolicDirection dir) {
    require_unit_interval(r);
    if (max_word_len <= 0 || max_den <= 0)
        throw std::domain_error("orbit_bfs bounds must be positive");

    const i64 m = idx.m();
    const i64 q = r.num, p = r.den;

    std::vector<BfsNode> nodes;
    std::map<Slope, int> visited;
    std::deque<int> queue;

    nodes.push_back(BfsNode{Slope::infinity(), -1, Move{}, 0});
    visited.emplace(Slope::infinity(), 0);
    queue.push_back(0);

    auto try_child = [&](const Slope& child, int parent, Move via, i64 depth) {
        if (child.den > max_den) return;
        if (visited.count(child)) return;
        nodes.push_back(BfsNode{child, parent, via, depth});
        visited.emplace(child, static_cast<int>(nodes.size()) - 1);
        queue.push_back(static_cast<int>(nodes.size()) - 1);
    };

    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        const BfsNode node = nodes[static_cast<std::size_t>(cur)];
        if (node.depth == max_word_len) continue;
        const Slope x = node.slope;
        const i64 depth = node.depth + 1;

        try_child(x.negated(), cur, Move{MoveKind::refl0, 1}, depth);
        try_child(x.reflected_about(1), cur, Move{MoveKind::refl1, 1}, depth);
        try_child(x.plus_integer(2), cur, Move{MoveKind::translate, 1}, depth);
        try_child(x.plus_integer(-2), cur, Move{MoveKind::translate, -1}, depth);

        if (x == r) continue;  // the parabolic fixes r
        // Denominator of the parabolic power image is linear in the exponent:
        // den(T^e x) = |v + e·w| with w = ±m·p·(p·u − q·v), so the admissible
        // exponent range is a bounded interval.
        i64 w = checked_mul(checked_mul(m, p),
                            checked_sub(checked_mul(p, x.num), checked_mul(q, x.den)));
        if (dir == ParabolicDirection::counterclockwise) w = -w;
        if (w == 0) continue;  // only x = r, handled above, but keep the guard
        i64 aw = w > 0 ? w : -w;
        i64 cap = (max_den + x.den) / aw + 1;
        for (i64 e_abs = 1; e_abs <= cap; ++e_abs) {
            for (int sign = 0; sign < 2; ++sign) {
                i64 e = sign == 0 ? e_abs : -e_abs;
                i64 child_den = checked_add(x.den, checked_mul(e, w));
                if (child_den < 0) child_den = -child_den;
                if (child_den > max_den) continue;
                Slope child = apply_move(x, Move{MoveKind::parabolic, e}, r, idx, dir);
                try_child(child, cur, Move{MoveKind::parabolic, e}, depth);
            }
        }
    }

    OrbitMap out;
    for (const auto& [slope, index] : visited) {
        std::vector<Move> word;
        for (int i = index; nodes[static_cast<std::size_t>(i)].parent >= 0;
             i = nodes[static_cast<std::size_t>(i)].parent)
            word.push_back(nodes[static_cast<std::size_t>(i)].via);
        std::reverse(word.begin(), word.end());
        out.emplace(slope, OrbitWitness{slope, std::move(word), std::nullopt, std::nullopt});
    }
    return out;
}

OrbitMap orbit_enumerate_pattern(const Slope& r, HeckoidIndex idx, i64 t_max, i64 c_bound) {
    require_unit_interval(r);
    if (t_max < 1 || c_bound < 0)
        throw std::domain_error("pattern enumeration requires t_max >= 1 and c_bound >= 0");

    const ContFrac a = cf_expand(r);
    OrbitMap out;

    for (i64 t = 1; t <= t_max; ++t) {
        const i64 ncs = 2 * t - 1;
        for (i64 c = -c_bound; c <= c_bound; ++c) {
            std::vector<int> eps(static_cast<std::size_t>(t), +1);
            while (true) {
                std::vector<i64> cs(static_cast<std::size_t>(ncs), -c_bound);
                while (true) {
                    PatternParams params{t, c, eps, cs};
                    ContFrac assembled = assemble_pattern(a, idx, params);
                    Slope s = cf_eval(assembled);
                    if (!out.count(s))
                        out.emplace(s, OrbitWitness{s, std::nullopt, params, assembled});

                    // advance cs odometer
                    std::size_t pos = cs.size();
                    while (pos > 0 && cs[pos - 1] == c_bound) {
                        cs[pos - 1] = -c_bound;
                        --pos;
                    }
                    if (pos == 0) break;
                    ++cs[pos - 1];
                }
                // advance eps odometer (+1 before −1)
                std::size_t pos = eps.size();
                while (pos > 0 && eps[pos - 1] == -1) {
                    eps[pos - 1] = +1;
                    --pos;
                }
                if (pos == 0) break;
                eps[pos - 1] = -1;
            }
        }
    }
    return out;
}

MembershipVerdict is_in_orbit(const Slope& s, const Slope& r, HeckoidIndex idx,
                              const SearchBudget& budget) {
    require_unit_interval(r);
    if (s.is_infinite())
        return MembershipVerdict{Membership::member,
                                 OrbitWitness{s, std::vector<Move>{}, std::nullopt, std::nullopt}};

    // Positive verdicts re-verify their witness before being returned.
    OrbitMap patterns = orbit_enumerate_pattern(r, idx, budget.t_max, budget.c_bound);
    if (auto it = patterns.find(s); it != patterns.end()) {
        if (cf_eval(assemble_pattern(cf_expand(r), idx, *it->second.pattern)) != s)
            throw std::logic_error("pattern witness failed verification");
        return MembershipVerdict{Membership::member, it->second};
    }

    OrbitMap bfs = orbit_bfs(r, idx, budget.max_word_len, budget.max_den);
    if (auto it = bfs.find(s); it != bfs.end()) {
        if (apply_moves(*it->second.word, r, idx) != s)
            throw std::logic_error("generator-word witness failed verification");
        return MembershipVerdict{Membership::member, it->second};
    }

    return MembershipVerdict{Membership::not_found_within_budget, std::nullopt};
}

EpiVerdict admits_epimorphism(const Slope& s, const Slope& r, HeckoidIndex idx,
                              const SearchBudget& budget) {
    MembershipVerdict direct = is_in_orbit(s, r, idx, budget);
    if (direct.is_member())
        return EpiVerdict{Membership::member, EpiRoute::via_s, direct.witness};
    MembershipVerdict shifted = is_in_orbit(s.plus_integer(1), r, idx, budget);
    if (shifted.is_member())
        return EpiVerdict{Membership::member, EpiRoute::via_s_plus_one, shifted.witness};
    return EpiVerdict{Membership::not_found_within_budget, std::nullopt, std::nullopt};
}

Slope riley_family(i64 alpha, i64 beta, i64 d, i64 m, i64 e) {
    if (beta < 1 || beta >= alpha) throw std::domain_error("riley_family requires 1 <= beta < alpha");
    if (gcd_nonneg(alpha, beta) != 1) throw std::domain_error("riley_family requires gcd(alpha, beta) = 1");
    if (d < 2) throw std::domain_error("riley_family requires d >= 2");
    if (m < 3) throw std::domain_error("riley_family requires m >= 3");
    if (e < 1) throw std::domain_error("riley_family requires e >= 1");
    i64 alpha_star = checked_mul(checked_pow(alpha, d), m);
    i64 beta_star = checked_add(
        checked_mul(checked_mul(checked_pow(alpha, d - 1), m), checked_sub(alpha, beta)), e);
    if (gcd_nonneg(beta_star, alpha_star) != 1)
        throw std::domain_error("riley_family slope is not reduced: gcd(beta*, alpha*) > 1");
    return Slope::of(beta_star, alpha_star);
}

}  // namespace heckoid
