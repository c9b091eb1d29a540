#include "gtcount/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace gtc {

Monomial::Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(unsigned var, unsigned exp) {
    if (var == 0) throw std::invalid_argument("Monomial: variables are 1-based");
    if (exp == 0) return Monomial();
    std::vector<unsigned> e(var, 0);
    e[var - 1] = exp;
    return Monomial(std::move(e));
}

unsigned Monomial::exponent(unsigned var) const {
    if (var == 0) throw std::invalid_argument("Monomial: variables are 1-based");
    return var <= exps_.size() ? exps_[var - 1] : 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::vector<unsigned> e(std::max(exps_.size(), rhs.exps_.size()), 0);
    for (std::size_t i = 0; i < exps_.size(); ++i) e[i] += exps_[i];
    for (std::size_t i = 0; i < rhs.exps_.size(); ++i) e[i] += rhs.exps_[i];
    return Monomial(std::move(e));
}

Polynomial::Polynomial(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(unsigned var) {
    return term(Rat(1), Monomial::variable(var));
}

Polynomial Polynomial::term(const Rat& coeff, Monomial m) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned Polynomial::max_var() const {
    unsigned v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
    return v;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

unsigned Polynomial::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    Polynomial result;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) result.add_term(ma * mb, ca * cb);
    terms_ = std::move(result.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Heaviest monomial first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool wrote_coeff = false;
        if (a != 1 || m.is_one()) {
            out << a.str();
            wrote_coeff = true;
        }
        bool first_factor = true;
        for (unsigned v = 1; v <= m.max_var(); ++v) {
            unsigned e = m.exponent(v);
            if (e == 0) continue;
            if (wrote_coeff || !first_factor) out << "*";
            out << "x" << v;
            if (e > 1) out << "^" << e;
            first_factor = false;
        }
    }
    return out.str();
}

Rat eval(const Polynomial& p, const std::vector<Rat>& point) {
    Rat total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rat v = c;
        bool zero = false;
        for (unsigned var = 1; var <= m.max_var(); ++var) {
            unsigned e = m.exponent(var);
            if (e == 0) continue;
            if (var > point.size() || point[var - 1] == 0) {
                zero = true;  // missing positions default to 0
                break;
            }
            v *= pow_rat(point[var - 1], e);
        }
        if (!zero) total += v;
    }
    return total;
}

Polynomial substitute(const Polynomial& p, unsigned var, const Polynomial& value) {
    if (var == 0) throw std::invalid_argument("substitute: variables are 1-based");
    // Powers of the replacement, computed once up to the largest exponent.
    std::vector<Polynomial> powers{Polynomial(Rat(1))};
    unsigned maxe = p.degree_in(var);
    for (unsigned e = 1; e <= maxe; ++e) powers.push_back(powers.back() * value);

    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        unsigned e = m.exponent(var);
        std::vector<unsigned> rest = m.exponents();
        if (e > 0) rest[var - 1] = 0;
        result += powers[e] * Polynomial::term(c, Monomial(std::move(rest)));
    }
    return result;
}

Polynomial shift(const Polynomial& p, unsigned var, const Rat& delta) {
    if (delta == 0) return p;
    return substitute(p, var, Polynomial::variable(var) + Polynomial(delta));
}

Polynomial shift(const Polynomial& p, unsigned var, std::int64_t delta) {
    return shift(p, var, Rat(delta));
}

Polynomial pow(const Polynomial& p, unsigned exp) {
    Polynomial r(Rat(1));
    for (unsigned i = 0; i < exp; ++i) r *= p;
    return r;
}

}  // namespace gtc
