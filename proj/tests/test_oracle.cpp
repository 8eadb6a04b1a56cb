#include "slpseq/oracle.hpp"

#include "doctest.h"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace slpseq;
using testutil::u32;

TEST_CASE("oracle lcs") {
    CHECK(oracle::lcs(u32("baabcbca"), u32("baabcabcabaca")) == 8);
    CHECK(oracle::lcs(u32("xyz"), u32("")) == 0);
    CHECK(oracle::lcs(u32(""), u32("xyz")) == 0);
    CHECK(oracle::lcs(u32("mississippi"), u32("mississippi")) == 11);
}

TEST_CASE("oracle critical points") {
    SUBCASE("figure instance has 21 points") {
        const auto pts = oracle::semilocalCriticalPoints(u32("baabcbca"), u32("baabcabcabaca"));
        CHECK(pts.size() == 21);
    }
    SUBCASE("single character against 'ab'") {
        const auto pts = oracle::semilocalCriticalPoints(u32("a"), u32("ab"));
        const std::vector<std::pair<long long, long long>> expected{{-1, 0}, {0, 2}, {1, 1}};
        CHECK(pts == expected);
    }
    SUBCASE("no common characters with m=1 gives the diagonal plus a boundary point") {
        const auto pts = oracle::semilocalCriticalPoints(u32("z"), u32("ab"));
        const std::vector<std::pair<long long, long long>> expected{{-1, 2}, {0, 0}, {1, 1}};
        CHECK(pts == expected);
    }
    SUBCASE("point set is a permutation on the core ranges") {
        std::mt19937_64 rng(3);
        for (int rep = 0; rep < 20; ++rep) {
            std::u32string a = testutil::randomPattern(rng, u32("abc"), 1, 12);
            std::u32string b = testutil::randomPattern(rng, u32("abc"), 1, 12);
            const auto pts = oracle::semilocalCriticalPoints(a, b);
            const long long m = static_cast<long long>(a.size());
            const long long n = static_cast<long long>(b.size());
            REQUIRE(pts.size() == static_cast<std::size_t>(m + n));
            std::set<long long> rows, cols;
            for (const auto& [r, c] : pts) {
                REQUIRE(r >= -m);
                REQUIRE(r <= n - 1);
                REQUIRE(c >= 0);
                REQUIRE(c <= m + n - 1);
                rows.insert(r);
                cols.insert(c);
            }
            REQUIRE(rows.size() == pts.size());
            REQUIRE(cols.size() == pts.size());
        }
    }
    SUBCASE("dominance count at (0,n) reproduces the lcs") {
        std::mt19937_64 rng(5);
        for (int rep = 0; rep < 40; ++rep) {
            std::u32string a = testutil::randomPattern(rng, u32("ab"), 1, 16);
            std::u32string b = testutil::randomPattern(rng, u32("ab"), 1, 10);
            const long long n = static_cast<long long>(b.size());
            long long dominated = 0;
            for (const auto& [r, c] : oracle::semilocalCriticalPoints(a, b))
                if (r >= 0 && c < n) ++dominated;
            REQUIRE(n - dominated == oracle::lcs(a, b));
        }
    }
}

TEST_CASE("oracle window counts") {
    const std::u32string fib = u32("abaababa");
    const std::u32string aab = u32("aab");
    CHECK(oracle::countMinimalWindows(fib, aab) == 2);
    CHECK(oracle::countFixedWindows(fib, aab, 5) == 4);
    CHECK(oracle::countBoundedMinimal(fib, aab, 3) == 1);
    CHECK(oracle::minimalWindows(fib, aab) ==
          std::vector<std::pair<long long, long long>>{{3, 5}, {4, 7}});

    SUBCASE("absent pattern") {
        CHECK(oracle::countMinimalWindows(fib, u32("abc")) == 0);
        CHECK(oracle::countFixedWindows(fib, u32("abc"), 4) == 0);
        CHECK(oracle::countBoundedMinimal(fib, u32("abc"), 8) == 0);
        CHECK(!oracle::containsSubsequence(fib, u32("abc")));
    }
    SUBCASE("runs of a single character") {
        const std::u32string a8 = u32("aaaaaaaa");
        CHECK(oracle::countMinimalWindows(a8, u32("a")) == 8);
        for (long long w = 1; w <= 8; ++w) CHECK(oracle::countFixedWindows(a8, u32("a"), w) == 9 - w);
    }
}

TEST_CASE("oracle greedy containment agrees with lcs on windows") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 30; ++rep) {
        std::u32string t = testutil::randomPattern(rng, u32("ab"), 1, 24);
        std::u32string p = testutil::randomPattern(rng, u32("ab"), 1, 6);
        for (std::size_t i = 0; i < t.size(); ++i) {
            for (std::size_t j = i; j < t.size(); ++j) {
                std::u32string_view win = std::u32string_view(t).substr(i, j - i + 1);
                REQUIRE(oracle::containsSubsequence(win, p) ==
                        (oracle::lcs(win, p) == static_cast<long long>(p.size())));
            }
        }
    }
}

TEST_CASE("oracle prefix length") {
    CHECK(oracle::longestPrefix(u32("abaababa"), u32("aab")) == 3);
    CHECK(oracle::longestPrefix(u32("abaababa"), u32("bbbb")) == 3);
    CHECK(oracle::longestPrefix(u32("abaababa"), u32("")) == 0);
    CHECK(oracle::containsSubsequence(u32("baabcabcabaca"), u32("baabcbca")));
}
