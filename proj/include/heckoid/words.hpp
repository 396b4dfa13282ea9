#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckoid/index.hpp"
#include "heckoid/slope.hpp"

namespace heckoid {

struct not_one_relator_error : std::domain_error {
    explicit not_one_relator_error(const std::string& msg) : std::domain_error(msg) {}
};

// A word in two generators a, b. Letters: +1 = a, −1 = a⁻¹, +2 = b, −2 = b⁻¹.
// Always stored freely reduced. Text form uses case for inverses: "abaBAB".
struct GroupWord {
    std::vector<std::int8_t> letters;

    static GroupWord from_letters(std::vector<std::int8_t> raw);  // reduces
    static GroupWord parse(const std::string& text);

    std::string str() const;
    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    GroupWord inverse() const;

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

GroupWord concat(const GroupWord& u, const GroupWord& v);
GroupWord power(const GroupWord& w, i64 n);
GroupWord conjugate(const GroupWord& g, const GroupWord& w);  // g w g⁻¹

GroupWord free_reduce(const GroupWord& w);    // identity on stored words
GroupWord cyclic_reduce(const GroupWord& w);
// Lexicographically least rotation of the reduced word (letter order a,A,b,B);
// canonical form for conjugacy-class bookkeeping.
GroupWord canonical_rotation(const GroupWord& w);

// a-exponent and b-exponent sums.
i64 exponent_sum_a(const GroupWord& w);
i64 exponent_sum_b(const GroupWord& w);

// εi = (−1)^⌊iq/p⌋ for i = 1 .. 2p−1.
std::vector<int> epsilon_seq(const Slope& s);

// The 2p-letter alternating word of the simple loop of slope s = q/p:
// positions alternate a, b starting with a; position 0 has exponent +1 and
// position i has exponent εi. Automatically freely and cyclically reduced.
GroupWord slope_word(const Slope& s);

struct Presentation {
    std::vector<std::string> generators{"a", "b"};
    std::vector<GroupWord> relators;

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

// ⟨a, b | slope_word(s)⟩, the 2-bridge link group of slope s.
Presentation link_group_presentation(const Slope& s);

// ⟨a, b | slope_word(r)^n⟩ for integer n = two_n/2. Odd two_n throws
// not_one_relator_error: no odd-index Heckoid group is a one-relator group,
// so there is no such presentation; use trace conditions instead.
Presentation heckoid_presentation(const Slope& r, HeckoidIndex idx);

}  // namespace heckoid
