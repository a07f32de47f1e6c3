#include <doctest.h>

#include <random>

#include "qp/error.hpp"
#include "qp/sequence.hpp"
#include "oracles.hpp"

using namespace qp;

namespace {

Sequence seq(std::vector<int> syms) {
    int a = 0;
    for (int s : syms) a = std::max(a, s + 1);
    return Sequence(std::move(syms), a);
}

Sequence random_seq(std::mt19937_64& rng, int len, int alphabet) {
    std::uniform_int_distribution<int> d(0, alphabet - 1);
    std::vector<int> s;
    for (int i = 0; i < len; ++i) s.push_back(d(rng));
    return Sequence(std::move(s), alphabet);
}

}  // namespace

TEST_SUITE("test_sequences") {

TEST_CASE("token mapping uses first-occurrence order") {
    Sequence s = sequence_from_tokens({"b", "a", "b", "c"});
    CHECK(s.symbols == std::vector<int>{0, 1, 0, 2});
    CHECK(s.alphabet_size == 3);
}

TEST_CASE("regularity windows") {
    CHECK(is_l_regular(seq({0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2}), 3));
    CHECK_FALSE(is_l_regular(seq({0, 0}), 2));
    CHECK(is_l_regular(Sequence({}, 0), 5));
}

TEST_CASE("abcabcabcabc is up(3,4)") {
    Sequence s = sequence_from_tokens(
        {"a", "b", "c", "a", "b", "c", "a", "b", "c", "a", "b", "c"});
    auto w = contains_up(s, 3, 4);
    REQUIRE(w);
    CHECK(w->valid_for(s));
    CHECK(w->positions == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
}

TEST_CASE("too-short input has no up witness") {
    CHECK_FALSE(contains_up(seq({0, 1, 2, 3}), 2, 3));
}

TEST_CASE("abcdcbabcd is up-down-up(4)") {
    Sequence s = sequence_from_tokens({"a", "b", "c", "d", "c", "b", "a", "b", "c", "d"});
    auto w = contains_up_down_up(s, 4);
    REQUIRE(w);
    CHECK(w->valid_for(s));
    CHECK(w->positions == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("abab is up-down-up(2)") {
    auto w = contains_up_down_up(seq({0, 1, 0, 1}), 2);
    REQUIRE(w);
    CHECK(w->positions == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("random sequences agree with the exhaustive oracle") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        Sequence s = random_seq(rng, 12, 4);
        for (int l = 2; l <= 4; ++l) {
            for (int t = 2; l * t <= 12; ++t) {
                auto w = contains_up(s, l, t);
                CHECK(w.has_value() == oracle::contains_up(s, l, t));
                if (w) CHECK(w->valid_for(s));
            }
            if (3 * l - 2 <= 12) {
                auto w = contains_up_down_up(s, l);
                CHECK(w.has_value() == oracle::contains_up_down_up(s, l));
                if (w) CHECK(w->valid_for(s));
            }
        }
    }
}

TEST_CASE("up witnesses are monotone in t") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        Sequence s = random_seq(rng, 12, 3);
        for (int l = 2; l <= 3; ++l)
            for (int t = 4; t >= 2; --t)
                if (contains_up(s, l, t + 1))
                    CHECK(contains_up(s, l, t));
    }
}

TEST_CASE("greedy extraction") {
    CHECK(extract_l_regular_greedy(seq({0, 0, 0, 1}), 2).symbols == std::vector<int>{0, 1});
    CHECK(extract_l_regular_greedy(seq({0, 1, 2}), 3).symbols == std::vector<int>{0, 1, 2});
    CHECK(extract_l_regular_greedy(seq({0, 1, 0, 1, 0}), 3).symbols ==
          std::vector<int>{0, 1});
    CHECK(extract_l_regular_greedy(seq({0, 1, 0, 1, 0}), 2).symbols ==
          std::vector<int>{0, 1, 0, 1, 0});
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        Sequence s = random_seq(rng, 20, 4);
        for (int l = 1; l <= 4; ++l)
            CHECK(is_l_regular(extract_l_regular_greedy(s, l), l));
    }
}

TEST_CASE("exact longest regular subsequence") {
    CHECK(longest_l_regular_subsequence(seq({0, 0, 0, 0}), 2).length() == 1);
    CHECK(longest_l_regular_subsequence(seq({0, 1, 0, 1}), 2).length() == 4);
    Sequence over_cap(std::vector<int>(41, 0), 1);
    CHECK_THROWS_AS(longest_l_regular_subsequence(over_cap, 2), Error);

    std::mt19937_64 rng(5);
    for (int it = 0; it < 150; ++it) {
        Sequence s = random_seq(rng, 14, 3);
        for (int l = 1; l <= 3; ++l) {
            Sequence best = longest_l_regular_subsequence(s, l);
            CHECK(is_l_regular(best, l));
            CHECK(best.length() == oracle::longest_regular(s, l));
            CHECK(best.length() >= extract_l_regular_greedy(s, l).length());
        }
    }
}

}  // TEST_SUITE
