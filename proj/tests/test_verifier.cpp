#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gtcount/enumeration.hpp"
#include "gtcount/formulas.hpp"
#include "gtcount/sweeps.hpp"
#include "gtcount/testhooks.hpp"
#include "gtcount/verifier.hpp"

using namespace gtc;

namespace {

Polynomial x(unsigned v) { return Polynomial::variable(v); }

std::mt19937 rng(5711);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-15, 15), den(1, 8);
    return make_rat(num(rng), den(rng));
}

std::vector<Rat> random_point(std::size_t n) {
    std::vector<Rat> p(n);
    for (auto& v : p) v = random_rat();
    return p;
}

}  // namespace

TEST_CASE("build_o_poly and build_e_poly first instances") {
    CHECK(build_o_poly(0) == Polynomial(Rat(1)));
    CHECK(build_o_poly(1) == x(1));
    CHECK(build_e_poly(1) == Polynomial(Rat(1)));
    CHECK(build_e_poly(2) ==
          Polynomial(Rat(1, 2)) * (x(1) - x(2)) * (x(2) + x(1) - Polynomial(Rat(1))));
    CHECK(build_o_poly(2) ==
          Polynomial(Rat(1, 6)) * x(1) * x(2) * (x(1) - x(2)) * (x(1) + x(2)));
}

TEST_CASE("product polynomials agree with the numeric formulas") {
    for (std::size_t k = 0; k <= 4; ++k) {
        const Polynomial o = build_o_poly(k);
        const Polynomial e = k >= 1 ? build_e_poly(k) : Polynomial();
        for (int trial = 0; trial < 20; ++trial) {
            const auto pt = random_point(k);
            CHECK(eval(o, pt) == o_formula(pt, k));
            if (k >= 1) CHECK(eval(e, pt) == e_formula(pt, k));
        }
    }
}

TEST_CASE("difference equation, odd to even") {
    // k=1 by hand: x1 - (x1-1) = 1 = e_1
    const Polynomial lhs = x(1) - shift(x(1), 1, -1);
    CHECK(lhs == Polynomial(Rat(1)));
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto r = verify_diff_odd_even(k);
        CHECK(r.verified);
        CHECK_FALSE(r.witness.has_value());
    }
}

TEST_CASE("difference equation, even to odd") {
    // k=2 by hand: (E_1 - I) e_2 = x_1 = o_1
    const Polynomial e2 = build_e_poly(2);
    CHECK(shift(e2, 1, 1) - e2 == x(1));
    for (std::size_t k = 2; k <= 4; ++k) {
        const auto r = verify_diff_even_odd(k);
        CHECK(r.verified);
    }
}

TEST_CASE("the reduced difference is free of the last variable") {
    // (E_1 - I)(E_2 - I) e_3 must not involve x_3
    Polynomial q = build_e_poly(3);
    for (unsigned i = 1; i <= 2; ++i) q = shift(q, i, 1) - q;
    CHECK_FALSE(q.depends_on(3));
    CHECK(q == build_o_poly(2));
}

TEST_CASE("vanishing substitutions") {
    CHECK(substitute(build_o_poly(2), 2, Polynomial()).is_zero());
    CHECK(substitute(build_e_poly(3), 1, x(2)).is_zero());
    for (std::size_t k = 1; k <= 4; ++k) CHECK(verify_vanishing(k).verified);
}

TEST_CASE("determinantal identities") {
    for (std::size_t k = 1; k <= 4; ++k) CHECK(verify_detid_odd_even(k).verified);
    for (std::size_t k = 2; k <= 4; ++k) CHECK(verify_detid_even_odd(k).verified);
    for (std::size_t k = 1; k <= 4; ++k) CHECK(verify_detid_odd_even_subs(k).verified);
}

TEST_CASE("column reduction") {
    for (std::size_t k = 1; k <= 4; ++k) CHECK(verify_column_reduction(k).verified);
    // the worked example: ((y+1/2)^3 - (y-1/2)^3)/3! = y^2/2! + 1/24
    const Polynomial f = (pow(x(1) + Polynomial(Rat(1, 2)), 3) -
                          pow(x(1) - Polynomial(Rat(1, 2)), 3)) *
                         Rat(1, 6);
    CHECK(f == Polynomial(Rat(1, 2)) * x(1) * x(1) + Polynomial(Rat(1, 24)));
}

TEST_CASE("determinant forms equal the product polynomials") {
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(det_poly(odd_det_matrix(k)) == build_o_poly(k));
        CHECK(det_poly(even_det_matrix(k)) == build_e_poly(k));
        CHECK(verify_det_forms(k).verified);
    }
}

TEST_CASE("verify_all covers every family") {
    const auto reports = verify_all(3);
    CHECK(reports.size() == 8 * 3 - 2);  // two families start at k=2
    for (const auto& r : reports) {
        CHECK(r.verified);
        CHECK_FALSE(r.witness.has_value());
    }
    CHECK(identity_names().size() == 8);
    CHECK(identity_min_k("diff-even-odd") == 2);
    CHECK_THROWS_AS(verify_identity("nope", 2), std::invalid_argument);
}

TEST_CASE("numeric spot-check of the verified identities") {
    // evaluating both sides of each identity at random rational points
    for (std::size_t k = 1; k <= 3; ++k) {
        const Polynomial o = build_o_poly(k);
        const Polynomial e = build_e_poly(k);
        Polynomial diff_oe = o;
        for (unsigned i = 1; i <= k; ++i) diff_oe -= shift(diff_oe, i, -1);
        const Polynomial det_o = det_poly(odd_det_matrix(k));
        const Polynomial det_e = det_poly(even_det_matrix(k));
        for (int trial = 0; trial < 20; ++trial) {
            const auto pt = random_point(k);
            CHECK(eval(diff_oe, pt) == eval(e, pt));
            CHECK(eval(det_o, pt) == eval(o, pt));
            CHECK(eval(det_e, pt) == eval(e, pt));
        }
    }
}

TEST_CASE("operator-language recursions hold numerically") {
    // The iterated geometric sums of shifts, with the operators acting on
    // argument slots. x_{k+1} = 0 in the odd case.
    auto check_odd = [&](const Row& row) {
        const std::size_t k = row.size();
        std::vector<std::int64_t> d(k);
        for (std::size_t i = 0; i + 1 < k; ++i) d[i] = row[i] - row[i + 1];
        d[k - 1] = row[k - 1];
        // sum over j_i in [1, d_i] of e_k(x_2 + j_1, ..., x_k + j_{k-1}, j_k)
        Rat total = 0;
        std::vector<std::int64_t> j(k, 1);
        while (true) {
            std::vector<Rat> arg(k);
            for (std::size_t i = 0; i < k; ++i)
                arg[i] = Rat((i + 1 < k ? row[i + 1] : 0) + j[i]);
            total += e_formula(arg, k);
            std::size_t pos = k;
            while (pos > 0 && j[pos - 1] == d[pos - 1]) --pos;
            if (pos == 0) break;
            ++j[pos - 1];
            for (std::size_t l = pos; l < k; ++l) j[l] = 1;
        }
        CHECK(total == o_formula(to_rat_point(row), k));
    };

    auto check_even = [&](const Row& row) {
        const std::size_t k = row.size();
        std::vector<std::int64_t> d(k - 1);
        for (std::size_t i = 0; i + 1 < k; ++i) d[i] = row[i] - row[i + 1];
        // sum over j_i in [0, d_i - 1] of o_{k-1}(x_2 + j_1, ..., x_k + j_{k-1})
        Rat total = 0;
        std::vector<std::int64_t> j(k - 1, 0);
        while (true) {
            std::vector<Rat> arg(k - 1);
            for (std::size_t i = 0; i + 1 < k; ++i) arg[i] = Rat(row[i + 1] + j[i]);
            total += o_formula(arg, k - 1);
            std::size_t pos = k - 1;
            while (pos > 0 && j[pos - 1] == d[pos - 1] - 1) --pos;
            if (pos == 0) break;
            ++j[pos - 1];
            for (std::size_t l = pos; l < k - 1; ++l) j[l] = 0;
        }
        CHECK(total == e_formula(to_rat_point(row), k));
    };

    for (const Row& row : decreasing_rows(1, 3, 7)) {
        check_odd(row);
        if (row.size() >= 2) check_even(row);
    }
}

TEST_CASE("faults break the symbolic suite") {
    testhooks::inject(testhooks::Fault::o_formula_denominator);
    CHECK_FALSE(verify_diff_odd_even(2).verified);
    CHECK(verify_diff_odd_even(2).witness.has_value());
    testhooks::inject(testhooks::Fault::o_det_exponent);
    CHECK_FALSE(verify_det_forms(2).verified);
    testhooks::inject(testhooks::Fault::e_det_denominator);
    CHECK_FALSE(verify_det_forms(2).verified);
    testhooks::clear();
    CHECK(verify_diff_odd_even(2).verified);
    CHECK(verify_det_forms(2).verified);
}

TEST_CASE("failure reports carry the difference as a witness") {
    testhooks::inject(testhooks::Fault::e_formula_denominator);
    const auto r = verify_diff_odd_even(2);
    REQUIRE_FALSE(r.verified);
    REQUIRE(r.witness.has_value());
    testhooks::clear();
    // the witness is exactly lhs - rhs of the failed comparison
    Polynomial lhs = build_o_poly(2);
    for (unsigned i = 1; i <= 2; ++i) lhs -= shift(lhs, i, -1);
    testhooks::inject(testhooks::Fault::e_formula_denominator);
    const Polynomial rhs = build_e_poly(2);
    testhooks::clear();
    CHECK(*r.witness == lhs - rhs);
}
