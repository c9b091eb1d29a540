#include "gtcount/formulas.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gtcount/testhooks.hpp"

namespace gtc {

namespace {

using testhooks::Fault;

Int cached_factorial_product(std::map<std::size_t, Int>& cache, std::mutex& mu,
                             std::size_t k, unsigned (*arg)(std::size_t)) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Int v = 1;
    for (std::size_t j = 1; j <= k; ++j) v *= factorial(arg(j));
    return cache.emplace(k, std::move(v)).first->second;
}

unsigned odd_arg(std::size_t j) { return static_cast<unsigned>(2 * j - 1); }
unsigned even_arg(std::size_t j) { return static_cast<unsigned>(2 * j - 2); }

Int bareiss_det(std::vector<std::vector<Int>>& a) {
    const std::size_t n = a.size();
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

}  // namespace

namespace detail {

DetEntry odd_det_entry(std::size_t k, std::size_t i, std::size_t j) {
    (void)k;
    unsigned e = static_cast<unsigned>(2 * k - 2 * j + 1);
    DetEntry entry{e, e};
    if (i == 1 && j == 1) {
        if (testhooks::active() == Fault::o_det_exponent) ++entry.exponent;
        if (testhooks::active() == Fault::o_det_denominator) ++entry.factorial_arg;
    }
    return entry;
}

DetEntry even_det_entry(std::size_t k, std::size_t i, std::size_t j) {
    (void)k;
    unsigned e = static_cast<unsigned>(2 * k - 2 * j);
    DetEntry entry{e, e};
    if (i == 1 && j == 1) {
        if (testhooks::active() == Fault::e_det_exponent) ++entry.exponent;
        if (testhooks::active() == Fault::e_det_denominator) ++entry.factorial_arg;
    }
    return entry;
}

Int odd_formula_denominator_active(std::size_t k) {
    Int den = odd_formula_denominator(k);
    if (testhooks::active() == Fault::o_formula_denominator && k >= 1)
        den = den / factorial(odd_arg(k)) * factorial(odd_arg(k) + 1);
    return den;
}

Int even_formula_denominator_active(std::size_t k) {
    Int den = even_formula_denominator(k);
    if (testhooks::active() == Fault::e_formula_denominator && k >= 1)
        den = den / factorial(even_arg(k)) * factorial(even_arg(k) + 1);
    return den;
}

}  // namespace detail

Int odd_formula_denominator(std::size_t k) {
    static std::map<std::size_t, Int> cache;
    static std::mutex mu;
    return cached_factorial_product(cache, mu, k, odd_arg);
}

Int even_formula_denominator(std::size_t k) {
    static std::map<std::size_t, Int> cache;
    static std::mutex mu;
    return cached_factorial_product(cache, mu, k, even_arg);
}

Int gt_product_formula(const Row& u) {
    if (u.empty()) throw std::invalid_argument("gt_product_formula: empty row");
    Rat value = 1;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            value *= make_rat(Int(u[j]) - Int(u[i]), Int(j - i));
    if (!is_integer(value))
        throw std::logic_error("gt_product_formula: non-integral value " + value.str());
    return numerator(value);
}

Rat o_formula(const std::vector<Rat>& x, std::size_t k) {
    if (x.size() < k) throw std::invalid_argument("o_formula: point shorter than k");
    Rat num = 1;
    for (std::size_t j = 0; j < k; ++j) {
        num *= x[j];
        for (std::size_t i = 0; i < j; ++i) num *= (x[i] - x[j]) * (x[i] + x[j]);
    }
    return num / Rat(detail::odd_formula_denominator_active(k));
}

Rat e_formula(const std::vector<Rat>& x, std::size_t k) {
    if (x.size() < k) throw std::invalid_argument("e_formula: point shorter than k");
    Rat num = 1;
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < j; ++i) num *= (x[i] - x[j]) * (x[i] + x[j] - 1);
    return num / Rat(detail::even_formula_denominator_active(k));
}

Rat o_det(const std::vector<Rat>& x, std::size_t k) {
    if (x.size() < k) throw std::invalid_argument("o_det: point shorter than k");
    RationalMatrix m(k);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::odd_det_entry(k, i, j);
            m.at(i - 1, j - 1) =
                pow_rat(x[i - 1], entry.exponent) / Rat(factorial(entry.factorial_arg));
        }
    return det_exact(m);
}

Rat e_det(const std::vector<Rat>& x, std::size_t k) {
    if (x.size() < k) throw std::invalid_argument("e_det: point shorter than k");
    const Rat half(1, 2);
    RationalMatrix m(k);
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = 1; j <= k; ++j) {
            const auto entry = detail::even_det_entry(k, i, j);
            m.at(i - 1, j - 1) =
                pow_rat(x[i - 1] - half, entry.exponent) / Rat(factorial(entry.factorial_arg));
        }
    return det_exact(m);
}

Rat det_exact(const RationalMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const Int d = denominator(m.at(i, j));
            l = l / gcd(l, d) * d;  // lcm
        }
        for (std::size_t j = 0; j < n; ++j) {
            const Rat scaled = m.at(i, j) * Rat(l);
            a[i][j] = numerator(scaled);
        }
        scale *= l;
    }
    return make_rat(bareiss_det(a), scale);
}

Rat det_cofactor(const RationalMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Rat total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (m.at(i, 0) == 0) continue;
        RationalMatrix minor(n - 1);
        for (std::size_t r = 0, mr = 0; r < n; ++r) {
            if (r == i) continue;
            for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = m.at(r, c);
            ++mr;
        }
        const Rat term = m.at(i, 0) * det_cofactor(minor);
        total += (i % 2 == 0) ? term : -term;
    }
    return total;
}

std::vector<Rat> to_rat_point(const Row& row) {
    std::vector<Rat> point;
    point.reserve(row.size());
    for (auto v : row) point.emplace_back(v);
    return point;
}

}  // namespace gtc
