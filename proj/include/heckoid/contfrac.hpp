#pragma once

#include <vector>

#include "heckoid/slope.hpp"

namespace heckoid {

// Integer part plus a sequence of integer partial quotients:
//   value = whole + 1/(a1 + 1/(a2 + ... + 1/ak)).
// Terms may be any integers (zero and negative included); evaluation is
// projective, so it is total. An empty term list evaluates to ∞.
struct ContFrac {
    i64 whole = 0;
    std::vector<i64> terms;

    friend bool operator==(const ContFrac&, const ContFrac&) = default;
};

// Normalized expansion of a slope in (0,1): all terms ≥ 1, last term ≥ 2,
// whole = 0. Throws std::domain_error outside (0,1).
ContFrac cf_expand(const Slope& s);

Slope cf_eval(const ContFrac& f);

enum class SeqTransform { reverse, negate, negate_reverse };

std::vector<i64> seq_transform(std::vector<i64> terms, SeqTransform kind);

}  // namespace heckoid
