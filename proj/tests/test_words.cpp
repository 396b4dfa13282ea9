#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "heckoid/words.hpp"

using namespace heckoid;

TEST_CASE("epsilon sequence golden values") {
    CHECK(epsilon_seq(Slope::integer(0)) == std::vector<int>{+1});
    CHECK(epsilon_seq(Slope::of(1, 2)) == std::vector<int>{+1, -1, -1});
    CHECK(epsilon_seq(Slope::of(1, 3)) == std::vector<int>{+1, +1, -1, -1, -1});
    CHECK_THROWS_AS(epsilon_seq(Slope::infinity()), std::domain_error);
}

TEST_CASE("slope_word golden vectors") {
    CHECK(slope_word(Slope::integer(0)).str() == "ab");
    CHECK(slope_word(Slope::integer(1)).str() == "aB");
    CHECK(slope_word(Slope::of(1, 2)).str() == "abAB");
    CHECK(slope_word(Slope::of(1, 3)).str() == "abaBAB");
    CHECK_THROWS_AS(slope_word(Slope::infinity()), std::domain_error);
}

TEST_CASE("slope_word shape for all reduced q/p with p <= 100") {
    for (i64 p = 1; p <= 100; ++p)
        for (i64 q = 0; q < p; ++q) {
            if (gcd_nonneg(q, p) != 1) continue;
            GroupWord w = slope_word(Slope::of(q, p));
            REQUIRE(w.size() == static_cast<std::size_t>(2 * p));
            // strict a/b alternation
            for (std::size_t i = 0; i < w.size(); ++i) {
                int base = w.letters[i] > 0 ? w.letters[i] : -w.letters[i];
                REQUIRE(base == (i % 2 == 0 ? 1 : 2));
            }
            REQUIRE(free_reduce(w) == w);
            REQUIRE(cyclic_reduce(w) == w);
        }
}

TEST_CASE("exponent sums follow the epsilon definition") {
    for (i64 p = 1; p <= 60; ++p)
        for (i64 q = 0; q < p; ++q) {
            if (gcd_nonneg(q, p) != 1) continue;
            Slope s = Slope::of(q, p);
            std::vector<int> eps = epsilon_seq(s);
            i64 a_expected = 1, b_expected = 0;
            for (i64 i = 1; i <= 2 * p - 1; ++i) {
                if (i % 2 == 0)
                    a_expected += eps[static_cast<std::size_t>(i - 1)];
                else
                    b_expected += eps[static_cast<std::size_t>(i - 1)];
            }
            GroupWord w = slope_word(s);
            REQUIRE(exponent_sum_a(w) == a_expected);
            REQUIRE(exponent_sum_b(w) == b_expected);
            // p even: both sums vanish. p odd: the a-sum is +1 and the b-sum
            // is (−1)^q, so the total is 0 exactly when q is odd (the golden
            // vector "ab" for s = 0/1 already has total 2).
            if (p % 2 == 0) {
                REQUIRE(a_expected == 0);
                REQUIRE(b_expected == 0);
            } else {
                REQUIRE(a_expected == 1);
                REQUIRE(b_expected == (q % 2 == 1 ? -1 : 1));
                if (q % 2 == 1) REQUIRE(a_expected + b_expected == 0);
            }
        }
}

TEST_CASE("free and cyclic reduction") {
    CHECK(GroupWord::parse("aAb").str() == "b");
    CHECK(GroupWord::parse("abBA").str() == "");
    CHECK(cyclic_reduce(GroupWord::parse("baB")).str() == "a");
    CHECK(cyclic_reduce(GroupWord::parse("BabAb")).str() == "b");
    // idempotence
    GroupWord w = GroupWord::parse("abaBAB");
    CHECK(free_reduce(free_reduce(w)) == free_reduce(w));
    CHECK(cyclic_reduce(cyclic_reduce(w)) == cyclic_reduce(w));
}

TEST_CASE("inverse, concat, power, conjugate") {
    GroupWord w = GroupWord::parse("abA");
    CHECK(w.inverse().str() == "aBA");
    CHECK(concat(w, w.inverse()).empty());
    CHECK(power(GroupWord::parse("ab"), 3).str() == "ababab");
    CHECK(power(GroupWord::parse("ab"), -2).str() == "BABA");
    CHECK(power(GroupWord::parse("ab"), 0).empty());
    CHECK(conjugate(GroupWord::parse("b"), GroupWord::parse("a")).str() == "baB");
}

TEST_CASE("canonical rotation picks the least rotation") {
    CHECK(canonical_rotation(GroupWord::parse("ba")).str() == "ab");
    CHECK(canonical_rotation(GroupWord::parse("BAba")).str() == "aBAb");
    // rotation invariance
    GroupWord w = slope_word(Slope::of(2, 5));
    GroupWord rotated = GroupWord::from_letters([&] {
        auto l = w.letters;
        std::rotate(l.begin(), l.begin() + 3, l.end());
        return l;
    }());
    CHECK(canonical_rotation(w) == canonical_rotation(rotated));
}

TEST_CASE("presentations") {
    Presentation trefoil = link_group_presentation(Slope::of(1, 3));
    REQUIRE(trefoil.relators.size() == 1);
    CHECK(trefoil.relators[0].str() == "abaBAB");

    CHECK(link_group_presentation(Slope::integer(0)).relators[0].str() == "ab");
    CHECK(link_group_presentation(Slope::of(1, 2)).relators[0].str() == "abAB");

    Presentation heck = heckoid_presentation(Slope::of(1, 3), HeckoidIndex::from_two_n(4));
    REQUIRE(heck.relators.size() == 1);
    CHECK(heck.relators[0] == power(slope_word(Slope::of(1, 3)), 2));
    CHECK(heck.relators[0].str() == "abaBABabaBAB");

    // relator length is 2·p·n
    Presentation h29 = heckoid_presentation(Slope::of(2, 9), HeckoidIndex::from_two_n(4));
    CHECK(h29.relators[0].size() == 36);
}

TEST_CASE("odd index has no one-relator presentation") {
    CHECK_THROWS_AS(heckoid_presentation(Slope::of(1, 3), HeckoidIndex::from_two_n(5)),
                    not_one_relator_error);
    CHECK_THROWS_WITH_AS(heckoid_presentation(Slope::of(2, 9), HeckoidIndex::from_two_n(5)),
                         doctest::Contains("one-relator"), not_one_relator_error);
    CHECK_THROWS_AS(heckoid_presentation(Slope::of(3, 2), HeckoidIndex::from_two_n(4)),
                    std::domain_error);
}

TEST_CASE("word parsing rejects junk") {
    CHECK_THROWS_AS(GroupWord::parse("abc"), std::domain_error);
    CHECK(GroupWord::parse("").empty());
}
