#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gtcount/sweeps.hpp"

using namespace gtc;

TEST_CASE("row generators") {
    const auto dec = decreasing_rows(1, 2, 3);
    // 1,2,3 then (2,1),(3,1),(3,2)
    CHECK(dec.size() == 6);
    for (const auto& r : dec) {
        CHECK(strictly_decreasing(r));
        CHECK(all_positive(r));
        CHECK(r.front() <= 3);
    }
    CHECK(std::count_if(dec.begin(), dec.end(),
                        [](const Row& r) { return r.size() == 2; }) == 3);

    const auto inc = increasing_rows(1, 2, 2);
    // 0,1,2 then (0,1),(0,2),(1,2)
    CHECK(inc.size() == 6);
    for (const auto& r : inc) CHECK(strictly_increasing(r));

    CHECK(decreasing_rows(4, 4, 8).size() == 70);   // C(8,4)
    CHECK(increasing_rows(4, 4, 8).size() == 126);  // C(9,4)
    CHECK(decreasing_rows(1, 3, 8).size() == 8 + 28 + 56);
}

TEST_CASE("kernel evaluates all four routes") {
    const auto a = evaluate_halved_agreement({7, 6, 4, 1}, 8);
    CHECK(a.bruteforce == 2835);
    CHECK(a.recursion == 2835);
    CHECK(a.formula == 2835);
    CHECK(a.determinant == 2835);
    CHECK(a.agree());

    const auto g = evaluate_gt_agreement({2, 7, 10, 11, 17});
    CHECK(g.dp == 94500);
    CHECK(g.formula == 94500);
    CHECK(g.agree());
}

TEST_CASE("serial and parallel halved sweeps match exactly") {
    const auto xs = decreasing_rows(1, 3, 6);
    const auto serial = halved_agreement_sweep_serial(xs);
    const auto parallel = halved_agreement_sweep_parallel(xs);
    REQUIRE(serial.size() == parallel.size());
    REQUIRE(serial.size() == 2 * xs.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].x == parallel[i].x);
        CHECK(serial[i].rows == parallel[i].rows);
        CHECK(serial[i].bruteforce == parallel[i].bruteforce);
        CHECK(serial[i].recursion == parallel[i].recursion);
        CHECK(serial[i].formula == parallel[i].formula);
        CHECK(serial[i].determinant == parallel[i].determinant);
        CHECK(serial[i].agree());
    }
}

TEST_CASE("serial and parallel GT sweeps match exactly") {
    const auto us = increasing_rows(1, 4, 6);
    const auto serial = gt_agreement_sweep_serial(us);
    const auto parallel = gt_agreement_sweep_parallel(us);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].u == parallel[i].u);
        CHECK(serial[i].dp == parallel[i].dp);
        CHECK(serial[i].formula == parallel[i].formula);
        CHECK(serial[i].agree());
    }
}

TEST_CASE("dispatch helper") {
    const auto xs = decreasing_rows(2, 2, 4);
    CHECK(halved_agreement_sweep(xs, true).size() == halved_agreement_sweep(xs, false).size());
    const auto us = increasing_rows(1, 2, 3);
    CHECK(gt_agreement_sweep(us, true).size() == us.size());
}
