#include "gtcount/patterns.hpp"

#include <sstream>
#include <stdexcept>

namespace gtc {

namespace {

std::vector<Row> parse_rows(const std::string& text) {
    std::vector<Row> rows;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        Row row;
        std::istringstream fields(line);
        long long v;
        while (fields >> v) row.push_back(v);
        if (!fields.eof())
            throw std::invalid_argument("pattern text: bad entry in line '" + line + "'");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string rows_to_text(const std::vector<Row>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) out << ' ';
            out << r[j];
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json rows_to_json(const std::vector<Row>& rows) {
    nlohmann::json j;
    j["rows"] = rows;
    return j;
}

std::vector<Row> rows_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("pattern json: expected {\"rows\": [[...], ...]}");
    return j["rows"].get<std::vector<Row>>();
}

}  // namespace

GTPattern::GTPattern(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != i + 1)
            throw std::invalid_argument("GTPattern: row " + std::to_string(i + 1) +
                                        " must have " + std::to_string(i + 1) + " entries");
}

HalvedGTPattern::HalvedGTPattern(std::vector<Row> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != (i + 1) / 2)
            throw std::invalid_argument("HalvedGTPattern: row " + std::to_string(i + 1) +
                                        " must have " + std::to_string((i + 1) / 2) +
                                        " entries");
}

bool validate_gt(const GTPattern& p) {
    const std::size_t n = p.num_rows();
    if (n == 0) return false;
    for (std::size_t i = 1; i <= n; ++i)
        if (!all_nonnegative(p.row(i))) return false;
    for (std::size_t i = 2; i <= n; ++i) {
        const Row& above = p.row(i - 1);
        const Row& below = p.row(i);
        for (std::size_t j = 1; j < i; ++j) {
            // below[j-1] <= above[j-1] < below[j]
            if (!(below[j - 1] <= above[j - 1] && above[j - 1] < below[j])) return false;
        }
    }
    return true;
}

bool validate_halved(const HalvedGTPattern& p) {
    const std::size_t n = p.num_rows();
    if (n == 0) return false;
    for (std::size_t i = 1; i <= n; ++i)
        if (!all_positive(p.row(i))) return false;

    for (std::size_t i = 2; i <= n; ++i) {
        const Row& above = p.row(i - 1);
        const Row& cur = p.row(i);
        const std::size_t m = cur.size();  // floor(i/2)
        if (i % 2 == 1) {
            // 0 < x_{i-1,m} <= x_{i,m} < x_{i-1,m-1} <= x_{i,m-1} < ... < x_{i-1,1} <= x_{i,1}
            for (std::size_t j = 1; j <= m; ++j)
                if (!(above[j - 1] <= cur[j - 1])) return false;
            for (std::size_t j = 2; j <= m; ++j)
                if (!(cur[j - 1] < above[j - 2])) return false;
        } else {
            // x_{i,m} <= x_{i-1,m-1} < x_{i,m-1} <= ... <= x_{i-1,1} < x_{i,1}
            for (std::size_t j = 1; j + 1 <= m; ++j) {
                if (!(cur[j] <= above[j - 1])) return false;
                if (!(above[j - 1] < cur[j - 1])) return false;
            }
        }
    }
    return true;
}

bool is_symmetric(const GTPattern& p) {
    const std::int64_t apex = p.entry(1, 1);
    for (std::size_t i = 1; i <= p.num_rows(); ++i) {
        const std::int64_t target = 2 * apex - 1 + static_cast<std::int64_t>(i);
        const Row& r = p.row(i);
        for (std::size_t j = 1; j <= i; ++j)
            if (r[j - 1] + r[i - j] != target) return false;
    }
    return true;
}

EncodedSymmetric encode_symmetric(const GTPattern& p) {
    if (!validate_gt(p)) throw std::invalid_argument("encode_symmetric: not a valid pattern");
    if (!is_symmetric(p)) throw std::invalid_argument("encode_symmetric: pattern is not symmetric");

    const std::int64_t apex = p.entry(1, 1);
    std::vector<Row> half(p.num_rows());
    for (std::size_t i = 2; i <= p.num_rows(); ++i) {
        const std::int64_t base = apex + static_cast<std::int64_t>((i - 1) / 2);
        Row& x = half[i - 1];
        x.resize(i / 2);
        for (std::size_t j = 1; j <= i / 2; ++j) x[j - 1] = p.entry(i, i + 1 - j) - base;
    }
    return EncodedSymmetric{apex, HalvedGTPattern(std::move(half))};
}

GTPattern decode_halved(std::int64_t apex, const HalvedGTPattern& h) {
    if (!validate_halved(h)) throw std::invalid_argument("decode_halved: invalid halved pattern");

    const std::size_t n = h.num_rows();
    std::vector<Row> rows(n);
    for (std::size_t i = 1; i <= n; ++i) {
        Row& u = rows[i - 1];
        u.resize(i);
        const std::int64_t base = apex + static_cast<std::int64_t>((i - 1) / 2);
        // right half, read from the right
        for (std::size_t j = 1; j <= i / 2; ++j) u[i - j] = h.entry(i, j) + base;
        // middle entry of odd rows is forced
        if (i % 2 == 1) u[(i - 1) / 2] = base;
        // left half mirrors the right half
        const std::int64_t target = 2 * apex - 1 + static_cast<std::int64_t>(i);
        for (std::size_t j = 1; j <= (i - i % 2) / 2; ++j) u[j - 1] = target - u[i - j];
    }
    GTPattern p(std::move(rows));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j)
            if (p.entry(i, j) < 0)
                throw std::invalid_argument("decode_halved: apex too small, entry u_{" +
                                            std::to_string(i) + "," + std::to_string(j) +
                                            "} = " + std::to_string(p.entry(i, j)) +
                                            " is negative");
    if (!validate_gt(p))
        throw std::invalid_argument("decode_halved: reconstruction violates interlacing");
    return p;
}

std::string to_text(const GTPattern& p) { return rows_to_text(p.rows()); }
std::string to_text(const HalvedGTPattern& p) { return rows_to_text(p.rows()); }

GTPattern gt_from_text(const std::string& text) { return GTPattern(parse_rows(text)); }

HalvedGTPattern halved_from_text(const std::string& text) {
    return HalvedGTPattern(parse_rows(text));
}

nlohmann::json to_json(const GTPattern& p) { return rows_to_json(p.rows()); }
nlohmann::json to_json(const HalvedGTPattern& p) { return rows_to_json(p.rows()); }

GTPattern gt_from_json(const nlohmann::json& j) { return GTPattern(rows_from_json(j)); }

HalvedGTPattern halved_from_json(const nlohmann::json& j) {
    return HalvedGTPattern(rows_from_json(j));
}

}  // namespace gtc
