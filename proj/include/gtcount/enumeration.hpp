#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gtcount/numeric.hpp"
#include "gtcount/patterns.hpp"

namespace gtc {

// Throws std::invalid_argument unless bottom is a usable GT bottom row:
// nonempty, entries >= 0, weakly increasing. A tie just yields count 0.
void require_gt_bottom(const Row& bottom);

// Throws unless x is strictly decreasing with entries >= 1 (empty allowed).
void require_halved_bottom(const Row& x);

// Visits every GT pattern with the given bottom row exactly once, in the
// lexicographic order of the row choices (bottom-up). The visitor returns
// false to stop early.
void enumerate_gt(const Row& bottom, const std::function<bool(const GTPattern&)>& visit);
std::vector<GTPattern> enumerate_gt_all(const Row& bottom,
                                        std::size_t limit = static_cast<std::size_t>(-1));

// Number of GT patterns with the given bottom row, by row-by-row dynamic
// programming over the interlacing constraints (independent of the product
// formula).
Int count_gt(const Row& bottom);

// O(x_1,...,x_k): halved patterns with 2k+1 rows, via the memoized
// summation recursion. O() = 1.
Int count_halved_odd(const Row& x);

// E(x_1,...,x_k): halved patterns with 2k rows, via the memoized summation
// recursion. E(x_1) = 1. x must be nonempty.
Int count_halved_even(const Row& x);

// Dispatches on the parity of `rows`; requires |x| = floor(rows/2).
Int count_halved(std::size_t rows, const Row& x);

// Visits every halved pattern with `rows` rows and the given bottom row
// exactly once. Requires |bottom| = floor(rows/2).
void enumerate_halved(std::size_t rows, const Row& bottom,
                      const std::function<bool(const HalvedGTPattern&)>& visit);
std::vector<HalvedGTPattern> enumerate_halved_all(std::size_t rows, const Row& bottom,
                                                  std::size_t limit = static_cast<std::size_t>(-1));

// Count by exhaustive search over the interlacing chains, without touching
// the summation recursion. The slow ground truth.
Int count_halved_bruteforce(std::size_t rows, const Row& bottom);

// Number of symmetric GT patterns with the given bottom row, by brute-force
// search. The bottom row must be strictly increasing and mirror-symmetric
// about its center (it determines the apex); otherwise std::invalid_argument.
Int count_symmetric_direct(const Row& bottom);

// Apex forced by a symmetric bottom row of length n: the row must satisfy
// u_j + u_{n+1-j} = 2*apex - 1 + n. Throws if no valid apex exists.
std::int64_t symmetric_bottom_apex(const Row& bottom);

}  // namespace gtc
