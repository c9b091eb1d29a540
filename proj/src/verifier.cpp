#include "gtcount/verifier.hpp"

#include <stdexcept>

#include "gtcount/formulas.hpp"

namespace gtc {

namespace {

const Rat kHalf(1, 2);

Polynomial x(unsigned var) { return Polynomial::variable(var); }

// (x_i + offset)^exponent / factorial_arg!
Polynomial power_entry(unsigned var, const Rat& offset, unsigned exponent,
                       unsigned factorial_arg) {
    Polynomial base = x(var) + Polynomial(offset);
    return pow(base, exponent) * make_rat(1, factorial(factorial_arg));
}

IdentityReport report_diff(std::string name, std::size_t k, const Polynomial& lhs,
                           const Polynomial& rhs) {
    if (lhs == rhs) return IdentityReport::pass(std::move(name), k);
    return IdentityReport::fail(std::move(name), k, lhs - rhs);
}

}  // namespace

Polynomial build_o_poly(std::size_t k) {
    Polynomial num(Rat(1));
    for (unsigned j = 1; j <= k; ++j) {
        num *= x(j);
        for (unsigned i = 1; i < j; ++i) num *= (x(i) - x(j)) * (x(i) + x(j));
    }
    return num * make_rat(1, detail::odd_formula_denominator_active(k));
}

Polynomial build_e_poly(std::size_t k) {
    Polynomial num(Rat(1));
    for (unsigned j = 1; j <= k; ++j)
        for (unsigned i = 1; i < j; ++i) num *= (x(i) - x(j)) * (x(i) + x(j) - Polynomial(Rat(1)));
    return num * make_rat(1, detail::even_formula_denominator_active(k));
}

Polynomial det_poly(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial(Rat(1));
    if (n == 1) return m[0][0];
    Polynomial total;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        PolyMatrix minor(n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            minor[mr].assign(m[r].begin() + 1, m[r].end());
            ++mr;
        }
        Polynomial term = m[i][0] * det_poly(minor);
        if (i % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

PolyMatrix reverse_columns(PolyMatrix m) {
    for (auto& row : m) std::reverse(row.begin(), row.end());
    return m;
}

PolyMatrix odd_det_matrix(std::size_t k) {
    PolyMatrix m(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::odd_det_entry(k, i, j);
            m[i - 1][j - 1] = power_entry(static_cast<unsigned>(i), Rat(0), entry.exponent,
                                          entry.factorial_arg);
        }
    return m;
}

PolyMatrix even_det_matrix(std::size_t k) {
    PolyMatrix m(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::even_det_entry(k, i, j);
            m[i - 1][j - 1] = power_entry(static_cast<unsigned>(i), -kHalf, entry.exponent,
                                          entry.factorial_arg);
        }
    return m;
}

IdentityReport verify_diff_odd_even(std::size_t k) {
    if (k < 1) throw std::invalid_argument("diff-odd-even requires k >= 1");
    Polynomial q = build_o_poly(k);
    for (unsigned i = 1; i <= k; ++i) q -= shift(q, i, -1);
    return report_diff("diff-odd-even", k, q, build_e_poly(k));
}

IdentityReport verify_diff_even_odd(std::size_t k) {
    if (k < 2) throw std::invalid_argument("diff-even-odd requires k >= 2");
    Polynomial q = build_e_poly(k);
    for (unsigned i = 1; i + 1 <= k; ++i) q = shift(q, i, 1) - q;
    if (q.depends_on(static_cast<unsigned>(k)))
        return IdentityReport::fail("diff-even-odd", k, q);
    return report_diff("diff-even-odd", k, q, build_o_poly(k - 1));
}

IdentityReport verify_vanishing(std::size_t k) {
    if (k < 1) throw std::invalid_argument("vanishing requires k >= 1");
    const Polynomial o = build_o_poly(k);
    const Polynomial e = build_e_poly(k);
    for (unsigned j = 1; j <= k; ++j) {
        Polynomial s = substitute(o, j, Polynomial());
        if (!s.is_zero()) return IdentityReport::fail("vanishing", k, s);
    }
    for (unsigned i = 1; i + 1 <= k; ++i) {
        Polynomial s = substitute(o, i, x(i + 1));
        if (!s.is_zero()) return IdentityReport::fail("vanishing", k, s);
        s = substitute(e, i, x(i + 1));
        if (!s.is_zero()) return IdentityReport::fail("vanishing", k, s);
    }
    return IdentityReport::pass("vanishing", k);
}

IdentityReport verify_detid_odd_even(std::size_t k) {
    if (k < 1) throw std::invalid_argument("detid-odd-even requires k >= 1");
    PolyMatrix lhs(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::odd_det_entry(k, i, j);
            const auto var = static_cast<unsigned>(i);
            lhs[i - 1][j - 1] =
                (pow(x(var), entry.exponent) - pow(x(var) - Polynomial(Rat(1)), entry.exponent)) *
                make_rat(1, factorial(entry.factorial_arg));
        }
    return report_diff("detid-odd-even", k, det_poly(lhs), det_poly(even_det_matrix(k)));
}

IdentityReport verify_detid_even_odd(std::size_t k) {
    if (k < 2) throw std::invalid_argument("detid-even-odd requires k >= 2");
    const std::size_t d = k - 1;

    // Reduced form: det[((x_i+1/2)^(2j) - (x_i-1/2)^(2j))/(2j)!] over
    // dimension k-1 equals det[x_i^(2j-1)/(2j-1)!].
    PolyMatrix lhs(d, std::vector<Polynomial>(d));
    PolyMatrix rhs(d, std::vector<Polynomial>(d));
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = 1; j <= d; ++j) {
            const auto var = static_cast<unsigned>(i);
            const auto e = static_cast<unsigned>(2 * j);
            lhs[i - 1][j - 1] = (pow(x(var) + Polynomial(kHalf), e) -
                                 pow(x(var) - Polynomial(kHalf), e)) *
                                make_rat(1, factorial(e));
            rhs[i - 1][j - 1] = power_entry(var, Rat(0), e - 1, e - 1);
        }
    IdentityReport reduced = report_diff("detid-even-odd", k, det_poly(lhs), det_poly(rhs));
    if (!reduced.verified) return reduced;

    // Full k x k form: rows i<k are the even matrix rows hit by (E_i - I),
    // the last row is untouched. Its last column is (0,...,0,1), so the
    // determinant is the (k-1)-minor, which equals o_{k-1}.
    PolyMatrix full(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::even_det_entry(k, i, j);
            const auto var = static_cast<unsigned>(i);
            if (i < k)
                full[i - 1][j - 1] = (pow(x(var) + Polynomial(kHalf), entry.exponent) -
                                      pow(x(var) - Polynomial(kHalf), entry.exponent)) *
                                     make_rat(1, factorial(entry.factorial_arg));
            else
                full[i - 1][j - 1] =
                    power_entry(var, -kHalf, entry.exponent, entry.factorial_arg);
        }
    return report_diff("detid-even-odd", k, det_poly(full), build_o_poly(k - 1));
}

IdentityReport verify_detid_odd_even_subs(std::size_t k) {
    if (k < 1) throw std::invalid_argument("detid-odd-even-subs requires k >= 1");

    // det[((x_i+1/2)^(2j-1) - (x_i-1/2)^(2j-1))/(2j-1)!] = det[x_i^(2j-2)/(2j-2)!]
    PolyMatrix lhs(k, std::vector<Polynomial>(k));
    PolyMatrix rhs(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto var = static_cast<unsigned>(i);
            const auto e = static_cast<unsigned>(2 * j - 1);
            lhs[i - 1][j - 1] = (pow(x(var) + Polynomial(kHalf), e) -
                                 pow(x(var) - Polynomial(kHalf), e)) *
                                make_rat(1, factorial(e));
            rhs[i - 1][j - 1] = power_entry(var, Rat(0), e - 1, e - 1);
        }
    IdentityReport direct =
        report_diff("detid-odd-even-subs", k, det_poly(lhs), det_poly(rhs));
    if (!direct.verified) return direct;

    // Equivalence to the unsubstituted identity: shifting every variable by
    // +1/2 and reversing columns must reproduce the two matrices entrywise.
    PolyMatrix lhs_unsub(k, std::vector<Polynomial>(k));
    PolyMatrix rhs_unsub(k, std::vector<Polynomial>(k));
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::odd_det_entry(k, i, j);
            const auto var = static_cast<unsigned>(i);
            lhs_unsub[i - 1][j - 1] =
                (pow(x(var), entry.exponent) - pow(x(var) - Polynomial(Rat(1)), entry.exponent)) *
                make_rat(1, factorial(entry.factorial_arg));
            const auto eentry = detail::even_det_entry(k, i, j);
            rhs_unsub[i - 1][j - 1] =
                power_entry(var, -kHalf, eentry.exponent, eentry.factorial_arg);
        }
    for (auto* mat : {&lhs_unsub, &rhs_unsub})
        for (std::size_t i = 1; i <= k; ++i)
            for (std::size_t j = 1; j <= k; ++j)
                (*mat)[i - 1][j - 1] =
                    shift((*mat)[i - 1][j - 1], static_cast<unsigned>(i), kHalf);
    lhs_unsub = reverse_columns(std::move(lhs_unsub));
    rhs_unsub = reverse_columns(std::move(rhs_unsub));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (lhs_unsub[i][j] != lhs[i][j])
                return IdentityReport::fail("detid-odd-even-subs", k, lhs_unsub[i][j] - lhs[i][j]);
            if (rhs_unsub[i][j] != rhs[i][j])
                return IdentityReport::fail("detid-odd-even-subs", k, rhs_unsub[i][j] - rhs[i][j]);
        }
    return IdentityReport::pass("detid-odd-even-subs", k);
}

IdentityReport verify_column_reduction(std::size_t k) {
    if (k < 1) throw std::invalid_argument("column-reduction requires k >= 1");

    // Columns are univariate; z stands for any row variable.
    const unsigned z = 1;

    // Reduces column f against the tail of right-hand columns g_1..g_{j-1},
    // checking that the leading terms already agree. Returns the residue.
    auto reduce = [&](Polynomial f, const std::vector<Polynomial>& g, std::size_t j,
                      const std::vector<unsigned>& degs) {
        Polynomial r = f - g[j - 1];
        for (std::size_t s = j - 1; s >= 1; --s) {
            const unsigned d = degs[s - 1];
            const Rat c = r.coefficient(Monomial::variable(z, d));
            if (c != 0) r -= Polynomial(c * Rat(factorial(d))) * g[s - 1];
        }
        return r;
    };

    // Identity with odd right-hand exponents: f_j = ((z+1/2)^(2j)-(z-1/2)^(2j))/(2j)!,
    // g_j = z^(2j-1)/(2j-1)!; defined at dimension k-1.
    if (k >= 2) {
        std::vector<Polynomial> g;
        std::vector<unsigned> degs;
        for (std::size_t j = 1; j + 1 <= k; ++j) {
            degs.push_back(static_cast<unsigned>(2 * j - 1));
            g.push_back(power_entry(z, Rat(0), degs.back(), degs.back()));
        }
        for (std::size_t j = 1; j + 1 <= k; ++j) {
            const auto e = static_cast<unsigned>(2 * j);
            Polynomial f = (pow(x(z) + Polynomial(kHalf), e) -
                            pow(x(z) - Polynomial(kHalf), e)) *
                           make_rat(1, factorial(e));
            if ((f - g[j - 1]).degree_in(z) >= degs[j - 1] && !(f - g[j - 1]).is_zero())
                return IdentityReport::fail("column-reduction", k, f - g[j - 1]);
            Polynomial r = reduce(f, g, j, degs);
            if (!r.is_zero()) return IdentityReport::fail("column-reduction", k, r);
        }
    }

    // Identity with even right-hand exponents: f_j = ((z+1/2)^(2j-1)-(z-1/2)^(2j-1))/(2j-1)!,
    // g_j = z^(2j-2)/(2j-2)!; defined at dimension k.
    {
        std::vector<Polynomial> g;
        std::vector<unsigned> degs;
        for (std::size_t j = 1; j <= k; ++j) {
            degs.push_back(static_cast<unsigned>(2 * j - 2));
            g.push_back(power_entry(z, Rat(0), degs.back(), degs.back()));
        }
        for (std::size_t j = 1; j <= k; ++j) {
            const auto e = static_cast<unsigned>(2 * j - 1);
            Polynomial f = (pow(x(z) + Polynomial(kHalf), e) -
                            pow(x(z) - Polynomial(kHalf), e)) *
                           make_rat(1, factorial(e));
            if ((f - g[j - 1]).degree_in(z) >= degs[j - 1] && !(f - g[j - 1]).is_zero())
                return IdentityReport::fail("column-reduction", k, f - g[j - 1]);
            Polynomial r = reduce(f, g, j, degs);
            if (!r.is_zero()) return IdentityReport::fail("column-reduction", k, r);
        }
    }
    return IdentityReport::pass("column-reduction", k);
}

IdentityReport verify_det_forms(std::size_t k) {
    if (k < 1) throw std::invalid_argument("det-forms requires k >= 1");
    Polynomial od = det_poly(odd_det_matrix(k));
    if (od != build_o_poly(k))
        return IdentityReport::fail("det-forms", k, od - build_o_poly(k));
    Polynomial ed = det_poly(even_det_matrix(k));
    if (ed != build_e_poly(k))
        return IdentityReport::fail("det-forms", k, ed - build_e_poly(k));
    return IdentityReport::pass("det-forms", k);
}

namespace {

struct Family {
    const char* name;
    std::size_t min_k;
    IdentityReport (*run)(std::size_t);
};

constexpr Family kFamilies[] = {
    {"diff-odd-even", 1, verify_diff_odd_even},
    {"diff-even-odd", 2, verify_diff_even_odd},
    {"vanishing", 1, verify_vanishing},
    {"detid-odd-even", 1, verify_detid_odd_even},
    {"detid-even-odd", 2, verify_detid_even_odd},
    {"detid-odd-even-subs", 1, verify_detid_odd_even_subs},
    {"column-reduction", 1, verify_column_reduction},
    {"det-forms", 1, verify_det_forms},
};

const Family& find_family(const std::string& name) {
    for (const auto& f : kFamilies)
        if (name == f.name) return f;
    throw std::invalid_argument("unknown identity '" + name + "'");
}

}  // namespace

std::size_t identity_min_k(const std::string& name) { return find_family(name).min_k; }

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const auto& f : kFamilies) names.emplace_back(f.name);
    return names;
}

IdentityReport verify_identity(const std::string& name, std::size_t k) {
    return find_family(name).run(k);
}

std::vector<IdentityReport> verify_all(std::size_t k_max) {
    std::vector<IdentityReport> reports;
    for (const auto& f : kFamilies)
        for (std::size_t k = f.min_k; k <= k_max; ++k) reports.push_back(f.run(k));
    return reports;
}

}  // namespace gtc
