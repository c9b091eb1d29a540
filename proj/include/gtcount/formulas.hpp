#pragma once

#include <cstdint>
#include <vector>

#include "gtcount/numeric.hpp"

namespace gtc {

// Dense square matrix of exact rationals; dimension 0 is allowed and its
// determinant is 1.
class RationalMatrix {
public:
    RationalMatrix() = default;
    explicit RationalMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim, Rat(0)) {}

    std::size_t dim() const { return dim_; }
    Rat& at(std::size_t i, std::size_t j) { return cells_[i * dim_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }

private:
    std::size_t dim_ = 0;
    std::vector<Rat> cells_;
};

// prod_{1<=i<j<=k} (u_j - u_i)/(j - i). The quotient is exact for integer
// input; a non-integral result indicates an implementation bug and throws
// std::logic_error.
Int gt_product_formula(const Row& u);

// o_k(x) = prod_{j=1..k} x_j prod_{i<j} (x_i - x_j)(x_i + x_j)
//          / (1! 3! ... (2k-1)!)
Rat o_formula(const std::vector<Rat>& x, std::size_t k);

// e_k(x) = prod_{j=1..k} prod_{i<j} (x_i - x_j)(x_i + x_j - 1)
//          / (0! 2! ... (2k-2)!)
Rat e_formula(const std::vector<Rat>& x, std::size_t k);

// Determinant forms of the same quantities:
// o_det: det[ x_i^(2k-2j+1) / (2k-2j+1)! ],
// e_det: det[ (x_i - 1/2)^(2k-2j) / (2k-2j)! ].
Rat o_det(const std::vector<Rat>& x, std::size_t k);
Rat e_det(const std::vector<Rat>& x, std::size_t k);

// Exact determinant: denominators are cleared per row, the integer matrix
// goes through fraction-free (Bareiss) elimination, and the scale is divided
// back out.
Rat det_exact(const RationalMatrix& m);

// Cofactor expansion, kept as an independent slow route for cross-checks.
Rat det_cofactor(const RationalMatrix& m);

// Factorial denominators of the product formulas, cached per k.
Int odd_formula_denominator(std::size_t k);   // 1! 3! ... (2k-1)!
Int even_formula_denominator(std::size_t k);  // 0! 2! ... (2k-2)!

std::vector<Rat> to_rat_point(const Row& row);

namespace detail {

// Exponent and factorial argument of one determinant entry, after applying
// any active test fault. Shared by the numeric and symbolic constructions so
// an injected fault hits both.
struct DetEntry {
    unsigned exponent;
    unsigned factorial_arg;
};
DetEntry odd_det_entry(std::size_t k, std::size_t i, std::size_t j);   // 1-based
DetEntry even_det_entry(std::size_t k, std::size_t i, std::size_t j);  // 1-based

Int odd_formula_denominator_active(std::size_t k);
Int even_formula_denominator_active(std::size_t k);

}  // namespace detail

}  // namespace gtc
