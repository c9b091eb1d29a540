#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "gtcount/numeric.hpp"

namespace gtc {

// Triangular array: row i (1-based) holds i entries u_{i,1..i}. The shape is
// enforced on construction; interlacing is checked by validate_gt.
class GTPattern {
public:
    GTPattern() = default;
    explicit GTPattern(std::vector<Row> rows);
    GTPattern(std::initializer_list<Row> rows) : GTPattern(std::vector<Row>(rows)) {}

    std::size_t num_rows() const { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_[i - 1]; }  // 1-based
    std::int64_t entry(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& bottom() const { return rows_.back(); }

    friend bool operator==(const GTPattern& a, const GTPattern& b) = default;

private:
    std::vector<Row> rows_;
};

// Right-half encoding of a symmetric pattern: row i holds floor(i/2) entries
// x_{i,1..floor(i/2)}; row 1 is always empty.
class HalvedGTPattern {
public:
    HalvedGTPattern() = default;
    explicit HalvedGTPattern(std::vector<Row> rows);
    HalvedGTPattern(std::initializer_list<Row> rows)
        : HalvedGTPattern(std::vector<Row>(rows)) {}

    std::size_t num_rows() const { return rows_.size(); }
    const Row& row(std::size_t i) const { return rows_[i - 1]; }  // 1-based
    std::int64_t entry(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }
    const std::vector<Row>& rows() const { return rows_; }
    const Row& bottom() const { return rows_.back(); }

    friend bool operator==(const HalvedGTPattern& a, const HalvedGTPattern& b) = default;

private:
    std::vector<Row> rows_;
};

// True iff consecutive rows interlace:
//   u_{i,1} <= u_{i-1,1} < u_{i,2} <= u_{i-1,2} < ... u_{i-1,i-1} < u_{i,i}
// and all entries are natural numbers (>= 0).
bool validate_gt(const GTPattern& p);

// True iff the odd/even interlacing chains hold for every row pair and all
// entries are >= 1.
bool validate_halved(const HalvedGTPattern& p);

// Mirror symmetry about the vertical axis:
//   u_{i,j} = (2 u_{1,1} - 1) + i - u_{i,i-j+1}  for all i, j.
// Pre: validate_gt(p).
bool is_symmetric(const GTPattern& p);

struct EncodedSymmetric {
    std::int64_t apex = 0;
    HalvedGTPattern half;
};

// Shift-and-reverse encoding of the right half:
//   x_{i,j} = u_{i,i+1-j} - (u_{1,1} + floor((i-1)/2)).
// Throws std::invalid_argument unless p is a valid symmetric pattern.
EncodedSymmetric encode_symmetric(const GTPattern& p);

// Inverse of encode_symmetric. Throws std::invalid_argument if h is invalid
// or the reconstruction produces a negative entry or breaks interlacing.
GTPattern decode_halved(std::int64_t apex, const HalvedGTPattern& h);

// Text form: one row per line, entries space-separated, top row first.
// Halved patterns include the empty first line.
std::string to_text(const GTPattern& p);
std::string to_text(const HalvedGTPattern& p);
GTPattern gt_from_text(const std::string& text);
HalvedGTPattern halved_from_text(const std::string& text);

// JSON form: {"rows": [[...], ...]}.
nlohmann::json to_json(const GTPattern& p);
nlohmann::json to_json(const HalvedGTPattern& p);
GTPattern gt_from_json(const nlohmann::json& j);
HalvedGTPattern halved_from_json(const nlohmann::json& j);

}  // namespace gtc
