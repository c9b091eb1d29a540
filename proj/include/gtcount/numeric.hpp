#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtc {

// Arbitrary-precision signed integer. Counts grow super-exponentially in the
// row length, so there is no fixed-width fallback anywhere.
using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in canonical form by the backend
// (denominator > 0, gcd(|num|, den) = 1), so == is mathematical equality.
using Rat = boost::multiprecision::cpp_rational;

// Integer row of a pattern. Entries are bounded by the input row, so a
// fixed-width type is exact here; only counts and coefficients need Int.
using Row = std::vector<std::int64_t>;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    return Rat(num) / Rat(den);  // handles sign normalization
}

inline Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
    using boost::multiprecision::pow;
    if (exp == 0) return Rat(1);
    return make_rat(pow(numerator(base), exp), pow(denominator(base), exp));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Throws unless r is an exact integer.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw std::domain_error("to_integer: value " + r.str() + " is not integral");
    return numerator(r);
}

inline bool strictly_increasing(const Row& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] >= r[i]) return false;
    return true;
}

inline bool weakly_increasing(const Row& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] > r[i]) return false;
    return true;
}

inline bool strictly_decreasing(const Row& r) {
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i - 1] <= r[i]) return false;
    return true;
}

inline bool all_positive(const Row& r) {
    for (auto v : r)
        if (v < 1) return false;
    return true;
}

inline bool all_nonnegative(const Row& r) {
    for (auto v : r)
        if (v < 0) return false;
    return true;
}

std::string row_to_string(const Row& r, char sep = ',');

// Parses "7,6,4,1" (optionally with spaces). Empty string -> empty row.
Row parse_row(const std::string& text);

}  // namespace gtc
