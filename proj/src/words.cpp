#include "heckoid/words.hpp"

#include <algorithm>

namespace heckoid {

namespace {

std::vector<std::int8_t> reduce_letters(const std::vector<std::int8_t>& raw) {
    std::vector<std::int8_t> out;
    out.reserve(raw.size());
    for (std::int8_t l : raw) {
        if (l == 0 || l < -2 || l > 2) throw std::domain_error("invalid word letter");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

// Collation a < a⁻¹ < b < b⁻¹ for canonical rotations.
int letter_rank(std::int8_t l) {
    switch (l) {
        case 1: return 0;
        case -1: return 1;
        case 2: return 2;
        default: return 3;
    }
}

}  // namespace

GroupWord GroupWord::from_letters(std::vector<std::int8_t> raw) {
    GroupWord w;
    w.letters = reduce_letters(raw);
    return w;
}

GroupWord GroupWord::parse(const std::string& text) {
    std::vector<std::int8_t> raw;
    raw.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'a': raw.push_back(1); break;
            case 'A': raw.push_back(-1); break;
            case 'b': raw.push_back(2); break;
            case 'B': raw.push_back(-2); break;
            default: throw std::domain_error(std::string("invalid word character '") + ch + "'");
        }
    }
    return from_letters(std::move(raw));
}

std::string GroupWord::str() const {
    std::string out;
    out.reserve(letters.size());
    for (std::int8_t l : letters) {
        switch (l) {
            case 1: out.push_back('a'); break;
            case -1: out.push_back('A'); break;
            case 2: out.push_back('b'); break;
            case -2: out.push_back('B'); break;
        }
    }
    return out;
}

GroupWord GroupWord::inverse() const {
    std::vector<std::int8_t> raw(letters.rbegin(), letters.rend());
    for (auto& l : raw) l = static_cast<std::int8_t>(-l);
    return from_letters(std::move(raw));
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
    std::vector<std::int8_t> raw = u.letters;
    raw.insert(raw.end(), v.letters.begin(), v.letters.end());
    return GroupWord::from_letters(std::move(raw));
}

GroupWord power(const GroupWord& w, i64 n) {
    GroupWord base = n < 0 ? w.inverse() : w;
    i64 count = n < 0 ? -n : n;
    GroupWord out;
    for (i64 i = 0; i < count; ++i) out = concat(out, base);
    return out;
}

GroupWord conjugate(const GroupWord& g, const GroupWord& w) {
    return concat(concat(g, w), g.inverse());
}

GroupWord free_reduce(const GroupWord& w) { return GroupWord::from_letters(w.letters); }

GroupWord cyclic_reduce(const GroupWord& w) {
    std::vector<std::int8_t> letters = free_reduce(w).letters;
    std::size_t lo = 0, hi = letters.size();
    while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
        ++lo;
        --hi;
    }
    return GroupWord::from_letters({letters.begin() + static_cast<std::ptrdiff_t>(lo),
                                    letters.begin() + static_cast<std::ptrdiff_t>(hi)});
}

GroupWord canonical_rotation(const GroupWord& w) {
    const auto& l = w.letters;
    if (l.size() <= 1) return w;
    std::size_t best = 0;
    for (std::size_t start = 1; start < l.size(); ++start) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            int cur = letter_rank(l[(start + i) % l.size()]);
            int ref = letter_rank(l[(best + i) % l.size()]);
            if (cur != ref) {
                if (cur < ref) best = start;
                break;
            }
        }
    }
    std::vector<std::int8_t> rotated;
    rotated.reserve(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) rotated.push_back(l[(best + i) % l.size()]);
    return GroupWord::from_letters(std::move(rotated));
}

i64 exponent_sum_a(const GroupWord& w) {
    i64 sum = 0;
    for (std::int8_t l : w.letters)
        if (l == 1 || l == -1) sum += l;
    return sum;
}

i64 exponent_sum_b(const GroupWord& w) {
    i64 sum = 0;
    for (std::int8_t l : w.letters)
        if (l == 2 || l == -2) sum += l / 2;
    return sum;
}

std::vector<int> epsilon_seq(const Slope& s) {
    if (s.is_infinite()) throw std::domain_error("epsilon_seq is undefined at infinity");
    const i64 q = s.num, p = s.den;
    std::vector<int> eps;
    eps.reserve(static_cast<std::size_t>(2 * p - 1));
    for (i64 i = 1; i <= 2 * p - 1; ++i)
        eps.push_back(floor_div(checked_mul(i, q), p) % 2 == 0 ? +1 : -1);
    return eps;
}

GroupWord slope_word(const Slope& s) {
    if (s.is_infinite())
        throw std::domain_error("the loop at infinity is killed, not represented by a word");
    const i64 p = s.den;
    std::vector<int> eps = epsilon_seq(s);
    std::vector<std::int8_t> letters;
    letters.reserve(static_cast<std::size_t>(2 * p));
    letters.push_back(1);  // position 0: a
    for (i64 i = 1; i <= 2 * p - 1; ++i) {
        std::int8_t base = i % 2 == 0 ? 1 : 2;
        letters.push_back(static_cast<std::int8_t>(base * eps[static_cast<std::size_t>(i - 1)]));
    }
    GroupWord w = GroupWord::from_letters(std::move(letters));
    // Alternating a/b words admit no cancellation.
    return w;
}

Presentation link_group_presentation(const Slope& s) {
    Presentation pres;
    pres.relators.push_back(slope_word(s));
    return pres;
}

Presentation heckoid_presentation(const Slope& r, HeckoidIndex idx) {
    if (!r.in_unit_interval())
        throw std::domain_error("heckoid_presentation requires 0 < r < 1");
    if (!idx.is_even())
        throw not_one_relator_error(
            "no odd-index Heckoid group is a one-relator group; "
            "use trace conditions for half-integer indices");
    Presentation pres;
    pres.relators.push_back(power(slope_word(r), idx.integer_n()));
    return pres;
}

}  // namespace heckoid
