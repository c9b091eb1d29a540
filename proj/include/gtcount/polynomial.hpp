#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gtcount/numeric.hpp"

namespace gtc {

// Power product of the variables x_1, x_2, ... . Exponents are stored by
// 1-based variable position with trailing zeros trimmed, so equal monomials
// compare equal structurally.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<unsigned> exponents);
    Monomial(std::initializer_list<unsigned> exponents)
        : Monomial(std::vector<unsigned>(exponents)) {}

    static Monomial one() { return Monomial(); }
    static Monomial variable(unsigned var, unsigned exp = 1);

    unsigned exponent(unsigned var) const;  // 1-based; 0 beyond the support
    unsigned max_var() const { return static_cast<unsigned>(exps_.size()); }
    unsigned total_degree() const;
    bool is_one() const { return exps_.empty(); }
    const std::vector<unsigned>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& rhs) const;

    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

private:
    std::vector<unsigned> exps_;
};

// Sparse multivariate polynomial over Rat. Zero coefficients are never
// stored, so structural equality is mathematical equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rat& c);  // NOLINT: constants convert implicitly
    Polynomial(std::int64_t c) : Polynomial(Rat(c)) {}

    static Polynomial variable(unsigned var);
    static Polynomial term(const Rat& coeff, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coefficient(const Monomial& m) const;
    unsigned max_var() const;  // largest variable index occurring
    unsigned total_degree() const;
    // Largest exponent of x_var over all terms.
    unsigned degree_in(unsigned var) const;
    bool depends_on(unsigned var) const { return degree_in(var) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rat& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
    friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    // Human-readable expanded form, e.g. "1/6*x1^3*x2 - x2".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
};

// Exact value at a point; variables beyond point.size() evaluate to 0,
// matching the argument convention (x_1,...,x_k,0,...).
Rat eval(const Polynomial& p, const std::vector<Rat>& point);

// Replaces x_var by `value` and expands.
Polynomial substitute(const Polynomial& p, unsigned var, const Polynomial& value);

// x_var -> x_var + delta. Integer deltas realize the shift operators and
// their inverses; rational deltas cover the half-integer substitutions.
Polynomial shift(const Polynomial& p, unsigned var, const Rat& delta);
Polynomial shift(const Polynomial& p, unsigned var, std::int64_t delta);

Polynomial pow(const Polynomial& p, unsigned exp);

}  // namespace gtc
