#include "heckoid/numeric.hpp"

namespace heckoid {

std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // -2^127 negates to itself; peel one digit first.
    std::string out;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        if (digit < 0) digit = -digit;
        out.push_back(static_cast<char>('0' + digit));
        v /= 10;
    }
    if (neg) out.push_back('-');
    return {out.rbegin(), out.rend()};
}

}  // namespace heckoid
