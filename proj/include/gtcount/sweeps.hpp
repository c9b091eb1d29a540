#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gtcount/numeric.hpp"

namespace gtc {

// One halved bottom row checked by all four counting routes. `rows` is 2k
// for the even count and 2k+1 for the odd count.
struct HalvedAgreement {
    Row x;
    std::size_t rows = 0;
    Int bruteforce;
    Int recursion;
    Rat formula;
    Rat determinant;

    bool agree() const {
        return Rat(bruteforce) == Rat(recursion) && Rat(recursion) == formula &&
               formula == determinant;
    }
};

// One GT bottom row checked by dynamic programming and the product formula.
struct GtAgreement {
    Row u;
    Int dp;
    Int formula;

    bool agree() const { return dp == formula; }
};

// All strictly decreasing rows with entries in [1, max_first] and length in
// [k_min, k_max], in lexicographic order.
std::vector<Row> decreasing_rows(std::size_t k_min, std::size_t k_max,
                                 std::int64_t max_first);

// All strictly increasing rows with entries in [0, max_entry] and length in
// [k_min, k_max], in lexicographic order.
std::vector<Row> increasing_rows(std::size_t k_min, std::size_t k_max,
                                 std::int64_t max_entry);

// Evaluates one bottom row by every route; the per-element kernel of the
// sweeps below.
HalvedAgreement evaluate_halved_agreement(const Row& x, std::size_t rows);
GtAgreement evaluate_gt_agreement(const Row& u);

// Serial reference implementations, kept as the baseline the parallel
// kernels are tested against.
std::vector<HalvedAgreement> halved_agreement_sweep_serial(const std::vector<Row>& xs);
std::vector<GtAgreement> gt_agreement_sweep_serial(const std::vector<Row>& us);

// OpenMP versions; element order and values match the serial sweeps exactly.
std::vector<HalvedAgreement> halved_agreement_sweep_parallel(const std::vector<Row>& xs);
std::vector<GtAgreement> gt_agreement_sweep_parallel(const std::vector<Row>& us);

std::vector<HalvedAgreement> halved_agreement_sweep(const std::vector<Row>& xs,
                                                    bool parallel);
std::vector<GtAgreement> gt_agreement_sweep(const std::vector<Row>& us, bool parallel);

}  // namespace gtc
