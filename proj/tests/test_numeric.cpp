#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gtcount/numeric.hpp"

using namespace gtc;

TEST_CASE("rationals are canonical") {
    CHECK(Rat(1, 2) == Rat(2, 4));
    CHECK(make_rat(3, -6) == Rat(-1, 2));
    CHECK(denominator(make_rat(3, -6)) == 1 * 2);
    CHECK(numerator(make_rat(-4, -8)) == 1);
    CHECK_THROWS_AS(make_rat(1, 0), std::domain_error);
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(factorial(20) == Int("2432902008176640000"));
    CHECK(pow_rat(Rat(-1, 2), 3) == Rat(-1, 8));
    CHECK(pow_rat(Rat(5), 0) == 1);
}

TEST_CASE("integrality") {
    CHECK(is_integer(Rat(10, 2)));
    CHECK(to_integer(Rat(10, 2)) == 5);
    CHECK_FALSE(is_integer(Rat(1, 3)));
    CHECK_THROWS_AS(to_integer(Rat(1, 3)), std::domain_error);
}

TEST_CASE("row predicates") {
    CHECK(strictly_increasing({1, 2, 5}));
    CHECK_FALSE(strictly_increasing({1, 1, 5}));
    CHECK(weakly_increasing({1, 1, 5}));
    CHECK_FALSE(weakly_increasing({2, 1}));
    CHECK(strictly_decreasing({7, 6, 4, 1}));
    CHECK_FALSE(strictly_decreasing({7, 7, 4}));
    CHECK(all_positive({1, 2}));
    CHECK_FALSE(all_positive({0, 2}));
    CHECK(all_nonnegative({0, 2}));
    CHECK_FALSE(all_nonnegative({-1, 2}));
    CHECK(strictly_increasing({}));
    CHECK(strictly_decreasing({}));
}

TEST_CASE("row parsing") {
    CHECK(parse_row("7,6,4,1") == Row{7, 6, 4, 1});
    CHECK(parse_row(" 2, 7 ,10") == Row{2, 7, 10});
    CHECK(parse_row("") == Row{});
    CHECK(parse_row("-3") == Row{-3});
    CHECK_THROWS_AS(parse_row("1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_row("1,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_row("1 2"), std::invalid_argument);
    CHECK(row_to_string({7, 6, 4, 1}) == "7,6,4,1");
}
