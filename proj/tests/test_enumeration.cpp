#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gtcount/enumeration.hpp"
#include "gtcount/sweeps.hpp"
#include "oracles.hpp"

using namespace gtc;

TEST_CASE("enumerate_gt basics") {
    // consecutive integers force every row
    CHECK(enumerate_gt_all({0, 1, 2, 3}).size() == 1);
    // a tie kills the strict chain
    CHECK(enumerate_gt_all({3, 3}).empty());
    // top entry satisfies 0 <= u_{1,1} < 2, so 0 or 1 (matches the product
    // formula value (2-0)/1 = 2)
    const auto ps = enumerate_gt_all({0, 2});
    REQUIRE(ps.size() == 2);
    for (const auto& p : ps) CHECK(validate_gt(p));
    CHECK(ps[0].entry(1, 1) == 0);
    CHECK(ps[1].entry(1, 1) == 1);
}

TEST_CASE("enumerate_gt input validation") {
    CHECK_THROWS_AS(enumerate_gt_all({}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_gt_all({2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_gt_all({-1, 2}), std::invalid_argument);
    CHECK_NOTHROW(enumerate_gt_all({1, 1}));  // weak increase accepted, yields nothing
}

TEST_CASE("count_gt basics") {
    CHECK(count_gt({0, 1, 2, 3}) == 1);
    CHECK(count_gt({3, 3}) == 0);
    CHECK(count_gt({0, 2}) == 2);
    CHECK(count_gt({7}) == 1);
    // confirmed by this dynamic-programming oracle, then frozen
    CHECK(count_gt({2, 7, 10, 11, 17}) == 94500);
}

TEST_CASE("enumeration agrees with count and the validators") {
    for (const Row& bottom : increasing_rows(1, 4, 8)) {
        std::set<std::string> seen;
        std::size_t n = 0;
        enumerate_gt(bottom, [&](const GTPattern& p) {
            ++n;
            CHECK(validate_gt(p));
            CHECK(p.bottom() == bottom);
            CHECK(seen.insert(to_text(p)).second);  // no duplicates
            return true;
        });
        CHECK(Int(n) == count_gt(bottom));
    }
}

TEST_CASE("count_gt matches the definition-level oracle") {
    for (const Row& bottom : increasing_rows(1, 3, 5)) {
        CHECK(count_gt(bottom) == oracles::naive_count_gt(bottom));
    }
    CHECK(count_gt({0, 1, 3}) == oracles::naive_count_gt({0, 1, 3}));
}

TEST_CASE("count_halved first instances") {
    CHECK(count_halved_odd({}) == 1);  // O(-) = 1
    for (std::int64_t x1 = 1; x1 <= 10; ++x1) {
        CHECK(count_halved_odd({x1}) == Int(x1));
        CHECK(count_halved_even({x1}) == 1);  // E(x_1) = 1
    }
    CHECK(count_halved_odd({5, 2}) == 35);
    CHECK(count_halved_even({4, 2}) == 5);
    CHECK(count_halved_even({7, 6, 4, 1}) == 2835);
    CHECK(count_halved_odd({7, 6, 4, 1}) == 10010);
}

TEST_CASE("count_halved input validation") {
    CHECK_THROWS_AS(count_halved_odd({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(count_halved_odd({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(count_halved_odd({0}), std::invalid_argument);
    CHECK_THROWS_AS(count_halved_even({}), std::invalid_argument);
    CHECK_THROWS_AS(count_halved(4, {3}), std::invalid_argument);
    CHECK_THROWS_AS(count_halved(0, {}), std::invalid_argument);
    CHECK(count_halved(5, {4, 2}) == count_halved_odd({4, 2}));
    CHECK(count_halved(4, {4, 2}) == count_halved_even({4, 2}));
}

TEST_CASE("enumerate_halved basics") {
    CHECK(enumerate_halved_all(1, {}).size() == 1);
    CHECK(enumerate_halved_all(2, {5}).size() == 1);
    // n=3, bottom (3): row-2 entry in {1,2,3}
    const auto ps = enumerate_halved_all(3, {3});
    REQUIRE(ps.size() == 3);
    for (const auto& p : ps) CHECK(validate_halved(p));
    CHECK(count_halved_bruteforce(8, {7, 6, 4, 1}) == 2835);
}

TEST_CASE("enumerate_halved agrees with recursion and the validators") {
    for (const Row& x : decreasing_rows(1, 3, 8)) {
        for (std::size_t rows : {2 * x.size(), 2 * x.size() + 1}) {
            std::set<std::string> seen;
            std::size_t n = 0;
            enumerate_halved(rows, x, [&](const HalvedGTPattern& p) {
                ++n;
                CHECK(validate_halved(p));
                CHECK(p.bottom() == x);
                CHECK(seen.insert(to_text(p)).second);
                return true;
            });
            CHECK(Int(n) == count_halved(rows, x));
        }
    }
}

TEST_CASE("halved counts match the definition-level oracle") {
    for (const Row& x : decreasing_rows(1, 2, 4)) {
        CHECK(count_halved_even(x) == oracles::naive_count_halved(2 * x.size(), x));
        if (2 * x.size() + 1 <= 5)
            CHECK(count_halved_odd(x) == oracles::naive_count_halved(2 * x.size() + 1, x));
    }
}

TEST_CASE("memoized recursion equals brute force on independent paths") {
    for (const Row& x : decreasing_rows(1, 3, 6)) {
        CHECK(count_halved_odd(x) == count_halved_bruteforce(2 * x.size() + 1, x));
        CHECK(count_halved_even(x) == count_halved_bruteforce(2 * x.size(), x));
    }
}

TEST_CASE("count_symmetric_direct") {
    // single-entry bottom row
    CHECK(count_symmetric_direct({5}) == 1);
    // the showcase bottom row equals the halved count
    CHECK(count_symmetric_direct({1, 2, 4, 7, 8, 11, 13, 14}) == 2835);
    // shift invariance
    CHECK(count_symmetric_direct({0, 2, 3, 5}) == count_symmetric_direct({3, 5, 6, 8}));
    // not mirror-symmetric about the center
    CHECK_THROWS_AS(count_symmetric_direct({1, 2, 4}), std::invalid_argument);
    // mirror-symmetric but no integer apex exists
    CHECK_THROWS_AS(count_symmetric_direct({1, 2, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(count_symmetric_direct({2, 1}), std::invalid_argument);
}

TEST_CASE("count_symmetric_direct equals filtered enumeration") {
    // the pruned search must agree with a plain enumerate-and-filter count
    for (const Row& bottom :
         {Row{1, 4}, Row{2, 5}, Row{1, 3, 5}, Row{2, 4, 6}, Row{1, 3, 4, 6},
          Row{0, 2, 3, 5}, Row{1, 3, 5, 7, 9}, Row{1, 2, 4, 5, 7, 8}}) {
        Int filtered = 0;
        enumerate_gt(bottom, [&](const GTPattern& p) {
            if (is_symmetric(p)) ++filtered;
            return true;
        });
        CHECK(count_symmetric_direct(bottom) == filtered);
    }
}

TEST_CASE("count_symmetric_direct equals the halved count via the encoding") {
    for (const Row& bottom : {Row{1, 4}, Row{1, 3, 5}, Row{1, 3, 4, 6}, Row{3, 5, 6, 8},
                              Row{1, 3, 5, 7, 9}, Row{1, 2, 4, 5, 7, 8}}) {
        const std::int64_t apex = symmetric_bottom_apex(bottom);
        const std::size_t n = bottom.size();
        Row half(n / 2);
        for (std::size_t j = 1; j <= n / 2; ++j)
            half[j - 1] = bottom[n - j] - (apex + static_cast<std::int64_t>((n - 1) / 2));
        CHECK(count_symmetric_direct(bottom) == count_halved(n, half));
    }
}

TEST_CASE("enumeration stops early when the visitor asks") {
    std::size_t n = 0;
    enumerate_gt({0, 2, 5}, [&](const GTPattern&) { return ++n < 4; });
    CHECK(n == 4);
    CHECK(enumerate_gt_all({0, 2, 5}, 2).size() == 2);
    CHECK(enumerate_halved_all(8, {7, 6, 4, 1}, 10).size() == 10);
}
