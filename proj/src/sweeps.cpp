#include "gtcount/sweeps.hpp"

#include "gtcount/enumeration.hpp"
#include "gtcount/formulas.hpp"

namespace gtc {

namespace {

void extend_decreasing(Row& prefix, std::size_t k_min, std::size_t k_max,
                       std::vector<Row>& out) {
    if (prefix.size() >= k_min) out.push_back(prefix);
    if (prefix.size() == k_max) return;
    for (std::int64_t v = prefix.back() - 1; v >= 1; --v) {
        prefix.push_back(v);
        extend_decreasing(prefix, k_min, k_max, out);
        prefix.pop_back();
    }
}

void extend_increasing(Row& prefix, std::size_t k_min, std::size_t k_max,
                       std::int64_t max_entry, std::vector<Row>& out) {
    if (prefix.size() >= k_min) out.push_back(prefix);
    if (prefix.size() == k_max) return;
    for (std::int64_t v = prefix.back() + 1; v <= max_entry; ++v) {
        prefix.push_back(v);
        extend_increasing(prefix, k_min, k_max, max_entry, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Row> decreasing_rows(std::size_t k_min, std::size_t k_max,
                                 std::int64_t max_first) {
    std::vector<Row> out;
    if (k_max == 0 || k_min > k_max) return out;
    for (std::int64_t first = 1; first <= max_first; ++first) {
        Row prefix{first};
        extend_decreasing(prefix, std::max<std::size_t>(k_min, 1), k_max, out);
    }
    return out;
}

std::vector<Row> increasing_rows(std::size_t k_min, std::size_t k_max,
                                 std::int64_t max_entry) {
    std::vector<Row> out;
    if (k_max == 0 || k_min > k_max) return out;
    for (std::int64_t first = 0; first <= max_entry; ++first) {
        Row prefix{first};
        extend_increasing(prefix, std::max<std::size_t>(k_min, 1), k_max, max_entry, out);
    }
    return out;
}

HalvedAgreement evaluate_halved_agreement(const Row& x, std::size_t rows) {
    const std::size_t k = x.size();
    const auto point = to_rat_point(x);
    HalvedAgreement a;
    a.x = x;
    a.rows = rows;
    a.bruteforce = count_halved_bruteforce(rows, x);
    a.recursion = count_halved(rows, x);
    if (rows % 2 == 1) {
        a.formula = o_formula(point, k);
        a.determinant = o_det(point, k);
    } else {
        a.formula = e_formula(point, k);
        a.determinant = e_det(point, k);
    }
    return a;
}

GtAgreement evaluate_gt_agreement(const Row& u) {
    return GtAgreement{u, count_gt(u), gt_product_formula(u)};
}

std::vector<HalvedAgreement> halved_agreement_sweep_serial(const std::vector<Row>& xs) {
    std::vector<HalvedAgreement> out(2 * xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::size_t k = xs[i].size();
        out[2 * i] = evaluate_halved_agreement(xs[i], 2 * k);
        out[2 * i + 1] = evaluate_halved_agreement(xs[i], 2 * k + 1);
    }
    return out;
}

std::vector<GtAgreement> gt_agreement_sweep_serial(const std::vector<Row>& us) {
    std::vector<GtAgreement> out(us.size());
    for (std::size_t i = 0; i < us.size(); ++i) out[i] = evaluate_gt_agreement(us[i]);
    return out;
}

std::vector<HalvedAgreement> halved_agreement_sweep_parallel(const std::vector<Row>& xs) {
    std::vector<HalvedAgreement> out(2 * xs.size());
    const auto n = static_cast<std::int64_t>(xs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::size_t k = xs[i].size();
        out[2 * i] = evaluate_halved_agreement(xs[i], 2 * k);
        out[2 * i + 1] = evaluate_halved_agreement(xs[i], 2 * k + 1);
    }
    return out;
}

std::vector<GtAgreement> gt_agreement_sweep_parallel(const std::vector<Row>& us) {
    std::vector<GtAgreement> out(us.size());
    const auto n = static_cast<std::int64_t>(us.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) out[i] = evaluate_gt_agreement(us[i]);
    return out;
}

std::vector<HalvedAgreement> halved_agreement_sweep(const std::vector<Row>& xs,
                                                    bool parallel) {
    return parallel ? halved_agreement_sweep_parallel(xs) : halved_agreement_sweep_serial(xs);
}

std::vector<GtAgreement> gt_agreement_sweep(const std::vector<Row>& us, bool parallel) {
    return parallel ? gt_agreement_sweep_parallel(us) : gt_agreement_sweep_serial(us);
}

}  // namespace gtc
