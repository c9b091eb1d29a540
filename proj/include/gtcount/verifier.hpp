#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gtcount/polynomial.hpp"

namespace gtc {

// Outcome of one symbolic identity check at a fixed k. When verification
// fails, `witness` holds the nonzero difference polynomial.
struct IdentityReport {
    std::string identity;
    std::size_t k = 0;
    bool verified = false;
    std::optional<Polynomial> witness;

    static IdentityReport pass(std::string name, std::size_t k) {
        return {std::move(name), k, true, std::nullopt};
    }
    static IdentityReport fail(std::string name, std::size_t k, Polynomial witness) {
        return {std::move(name), k, false, std::move(witness)};
    }
};

// The product polynomials o_k and e_k as exact multivariate polynomials in
// x_1..x_k.
Polynomial build_o_poly(std::size_t k);
Polynomial build_e_poly(std::size_t k);

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Determinant by cofactor expansion; dimension 0 gives 1.
Polynomial det_poly(const PolyMatrix& m);
PolyMatrix reverse_columns(PolyMatrix m);

// Symbolic matrices of the determinant forms:
//   odd:  [ x_i^(2k-2j+1) / (2k-2j+1)! ]
//   even: [ (x_i - 1/2)^(2k-2j) / (2k-2j)! ]
PolyMatrix odd_det_matrix(std::size_t k);
PolyMatrix even_det_matrix(std::size_t k);

// prod_i (I - E_i^-1) o_k = e_k
IdentityReport verify_diff_odd_even(std::size_t k);

// prod_{i<k} (E_i - I) e_k = o_{k-1}, and the result does not involve x_k.
IdentityReport verify_diff_even_odd(std::size_t k);  // k >= 2

// o_k vanishes under x_j -> 0 (j <= k) and x_i -> x_{i+1} (i < k);
// e_k vanishes under x_i -> x_{i+1} (i < k).
IdentityReport verify_vanishing(std::size_t k);

// det[(x_i^(2k-2j+1) - (x_i-1)^(2k-2j+1)) / (2k-2j+1)!]
//   = det[(x_i - 1/2)^(2k-2j) / (2k-2j)!]
IdentityReport verify_detid_odd_even(std::size_t k);

// det[((x_i+1/2)^(2j) - (x_i-1/2)^(2j)) / (2j)!]_{k-1}
//   = det[x_i^(2j-1) / (2j-1)!]_{k-1},
// plus the full k x k form whose last column collapses to a unit vector.
IdentityReport verify_detid_even_odd(std::size_t k);  // k >= 2

// det[((x_i+1/2)^(2j-1) - (x_i-1/2)^(2j-1)) / (2j-1)!]
//   = det[x_i^(2j-2) / (2j-2)!],
// plus entrywise equivalence to the previous identity under x -> x + 1/2
// and column reversal.
IdentityReport verify_detid_odd_even_subs(std::size_t k);

// Column-by-column elimination taking the left-hand matrices of the two
// reduced determinant identities to the right-hand matrices, using only
// determinant-preserving column operations.
IdentityReport verify_column_reduction(std::size_t k);

// The Vandermonde step: the symbolic determinants equal the product
// polynomials, det(odd) = o_k and det(even) = e_k.
IdentityReport verify_det_forms(std::size_t k);

// Smallest k each identity family is defined for.
std::size_t identity_min_k(const std::string& name);
std::vector<std::string> identity_names();

// Runs one family at one k (throws std::invalid_argument on unknown name).
IdentityReport verify_identity(const std::string& name, std::size_t k);

// Every family at every k in range, in a fixed order.
std::vector<IdentityReport> verify_all(std::size_t k_max);

}  // namespace gtc
