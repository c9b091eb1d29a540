#include "gtcount/enumeration.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gtc {

namespace {

// Inclusive entry ranges for the row above a GT row under the interlacing
// chain: v_j in [u_j, u_{j+1} - 1]. The choices are independent per position.
struct Box {
    std::int64_t lo, hi;
    bool empty() const { return lo > hi; }
};

std::vector<Box> gt_boxes_above(const Row& row) {
    std::vector<Box> boxes(row.size() - 1);
    for (std::size_t j = 0; j + 1 < row.size(); ++j) boxes[j] = {row[j], row[j + 1] - 1};
    return boxes;
}

// Row above row i of a halved pattern. For odd i the rows have equal length
// and y_j in [x_{j+1}+1, x_j] with y_last in [1, x_last]; for even i the row
// above is one shorter and y_j in [x_{j+1}, x_j - 1].
std::vector<Box> halved_boxes_above(std::size_t i, const Row& row) {
    std::vector<Box> boxes;
    if (i % 2 == 1) {
        const std::size_t m = row.size();
        boxes.resize(m);
        for (std::size_t j = 0; j + 1 < m; ++j) boxes[j] = {row[j + 1] + 1, row[j]};
        if (m > 0) boxes[m - 1] = {1, row[m - 1]};
    } else {
        const std::size_t m = row.size();
        if (m > 0) {
            boxes.resize(m - 1);
            for (std::size_t j = 0; j + 1 < m; ++j) boxes[j] = {row[j + 1], row[j] - 1};
        }
    }
    return boxes;
}

bool first_choice(const std::vector<Box>& boxes, Row& out) {
    out.resize(boxes.size());
    for (std::size_t j = 0; j < boxes.size(); ++j) {
        if (boxes[j].empty()) return false;
        out[j] = boxes[j].lo;
    }
    return true;
}

// Advances to the next tuple in lexicographic order; false when exhausted.
bool next_choice(const std::vector<Box>& boxes, Row& out) {
    for (std::size_t j = boxes.size(); j-- > 0;) {
        if (out[j] < boxes[j].hi) {
            ++out[j];
            for (std::size_t l = j + 1; l < boxes.size(); ++l) out[l] = boxes[l].lo;
            return true;
        }
    }
    return false;
}

// Depth-first search upward; rows are collected bottom-first in `stack`.
bool enumerate_gt_rec(std::vector<Row>& stack,
                      const std::function<bool(const GTPattern&)>& visit) {
    if (stack.back().size() == 1) {
        std::vector<Row> rows(stack.rbegin(), stack.rend());
        return visit(GTPattern(std::move(rows)));
    }
    auto boxes = gt_boxes_above(stack.back());
    Row above;
    if (!first_choice(boxes, above)) return true;
    do {
        stack.push_back(above);
        bool keep_going = enumerate_gt_rec(stack, visit);
        stack.pop_back();
        if (!keep_going) return false;
    } while (next_choice(boxes, above));
    return true;
}

bool enumerate_halved_rec(std::size_t i, std::vector<Row>& stack,
                          const std::function<bool(const HalvedGTPattern&)>& visit) {
    if (i == 1) {
        std::vector<Row> rows(stack.rbegin(), stack.rend());
        return visit(HalvedGTPattern(std::move(rows)));
    }
    auto boxes = halved_boxes_above(i, stack.back());
    Row above;
    if (!first_choice(boxes, above)) return true;
    do {
        stack.push_back(above);
        bool keep_going = enumerate_halved_rec(i - 1, stack, visit);
        stack.pop_back();
        if (!keep_going) return false;
    } while (next_choice(boxes, above));
    return true;
}

Int count_gt_rec(const Row& row, std::map<Row, Int>& memo) {
    if (row.size() == 1) return 1;
    auto it = memo.find(row);
    if (it != memo.end()) return it->second;
    Int total = 0;
    auto boxes = gt_boxes_above(row);
    Row above;
    if (first_choice(boxes, above)) {
        do total += count_gt_rec(above, memo);
        while (next_choice(boxes, above));
    }
    return memo.emplace(row, std::move(total)).first->second;
}

// Memoized evaluation of the alternating summation recursions. The memo is
// confined to one top-level call.
class HalvedCounter {
public:
    Int odd(const Row& x) {
        if (x.empty()) return 1;
        auto key = std::make_pair(true, x);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        auto boxes = halved_boxes_above(2 * x.size() + 1, x);
        Row y;
        if (first_choice(boxes, y)) {
            do total += even(y);
            while (next_choice(boxes, y));
        }
        return memo_.emplace(std::move(key), std::move(total)).first->second;
    }

    Int even(const Row& x) {
        if (x.size() == 1) return 1;
        auto key = std::make_pair(false, x);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        auto boxes = halved_boxes_above(2 * x.size(), x);
        Row y;
        if (first_choice(boxes, y)) {
            do total += odd(y);
            while (next_choice(boxes, y));
        }
        return memo_.emplace(std::move(key), std::move(total)).first->second;
    }

private:
    std::map<std::pair<bool, Row>, Int> memo_;
};

// Mirror condition for one row of a symmetric pattern with the given apex:
// v_j + v_{m+1-j} = 2*apex - 1 + m.
bool row_mirror_ok(const Row& v, std::int64_t apex) {
    const std::int64_t target = 2 * apex - 1 + static_cast<std::int64_t>(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] + v[v.size() - 1 - j] != target) return false;
    return true;
}

// Counts symmetric patterns by searching upward over interlacing rows,
// discarding rows that break the mirror condition. Every row of a symmetric
// pattern is mirror-symmetric about the apex forced by the bottom row, so
// the pruning loses nothing; surviving leaves are re-checked in full.
Int count_symmetric_rec(std::vector<Row>& stack, std::int64_t apex) {
    if (stack.back().size() == 1) {
        std::vector<Row> rows(stack.rbegin(), stack.rend());
        GTPattern p(std::move(rows));
        return is_symmetric(p) ? 1 : 0;
    }
    Int total = 0;
    auto boxes = gt_boxes_above(stack.back());
    Row above;
    if (!first_choice(boxes, above)) return 0;
    do {
        if (!row_mirror_ok(above, apex)) continue;
        stack.push_back(above);
        total += count_symmetric_rec(stack, apex);
        stack.pop_back();
    } while (next_choice(boxes, above));
    return total;
}

}  // namespace

void require_gt_bottom(const Row& bottom) {
    if (bottom.empty()) throw std::invalid_argument("GT bottom row must be nonempty");
    if (!all_nonnegative(bottom))
        throw std::invalid_argument("GT bottom row entries must be >= 0");
    if (!weakly_increasing(bottom))
        throw std::invalid_argument("GT bottom row must be weakly increasing");
}

void require_halved_bottom(const Row& x) {
    if (!all_positive(x) || !strictly_decreasing(x))
        throw std::invalid_argument(
            "halved bottom row must be strictly decreasing with entries >= 1");
}

void enumerate_gt(const Row& bottom, const std::function<bool(const GTPattern&)>& visit) {
    require_gt_bottom(bottom);
    std::vector<Row> stack{bottom};
    enumerate_gt_rec(stack, visit);
}

std::vector<GTPattern> enumerate_gt_all(const Row& bottom, std::size_t limit) {
    std::vector<GTPattern> out;
    enumerate_gt(bottom, [&](const GTPattern& p) {
        out.push_back(p);
        return out.size() < limit;
    });
    return out;
}

Int count_gt(const Row& bottom) {
    require_gt_bottom(bottom);
    std::map<Row, Int> memo;
    return count_gt_rec(bottom, memo);
}

Int count_halved_odd(const Row& x) {
    require_halved_bottom(x);
    return HalvedCounter().odd(x);
}

Int count_halved_even(const Row& x) {
    require_halved_bottom(x);
    if (x.empty()) throw std::invalid_argument("E requires a nonempty bottom row");
    return HalvedCounter().even(x);
}

Int count_halved(std::size_t rows, const Row& x) {
    if (rows == 0) throw std::invalid_argument("halved pattern needs at least one row");
    if (x.size() != rows / 2)
        throw std::invalid_argument("bottom row must have floor(rows/2) entries");
    return rows % 2 == 1 ? count_halved_odd(x) : count_halved_even(x);
}

void enumerate_halved(std::size_t rows, const Row& bottom,
                      const std::function<bool(const HalvedGTPattern&)>& visit) {
    if (rows == 0) throw std::invalid_argument("halved pattern needs at least one row");
    if (bottom.size() != rows / 2)
        throw std::invalid_argument("bottom row must have floor(rows/2) entries");
    require_halved_bottom(bottom);
    std::vector<Row> stack{bottom};
    enumerate_halved_rec(rows, stack, visit);
}

std::vector<HalvedGTPattern> enumerate_halved_all(std::size_t rows, const Row& bottom,
                                                  std::size_t limit) {
    std::vector<HalvedGTPattern> out;
    enumerate_halved(rows, bottom, [&](const HalvedGTPattern& p) {
        out.push_back(p);
        return out.size() < limit;
    });
    return out;
}

Int count_halved_bruteforce(std::size_t rows, const Row& bottom) {
    Int n = 0;
    enumerate_halved(rows, bottom, [&](const HalvedGTPattern&) {
        ++n;
        return true;
    });
    return n;
}

std::int64_t symmetric_bottom_apex(const Row& bottom) {
    if (bottom.empty()) throw std::invalid_argument("symmetric bottom row must be nonempty");
    const auto n = static_cast<std::int64_t>(bottom.size());
    const std::int64_t sum = bottom.front() + bottom.back();
    for (std::size_t j = 0; j < bottom.size(); ++j)
        if (bottom[j] + bottom[bottom.size() - 1 - j] != sum)
            throw std::invalid_argument(
                "bottom row is not mirror-symmetric about its center");
    // sum = 2*apex - 1 + n
    const std::int64_t twice_apex = sum + 1 - n;
    if (twice_apex % 2 != 0 || twice_apex < 0)
        throw std::invalid_argument("bottom row admits no valid apex");
    return twice_apex / 2;
}

Int count_symmetric_direct(const Row& bottom) {
    require_gt_bottom(bottom);
    if (!strictly_increasing(bottom))
        throw std::invalid_argument("symmetric bottom row must be strictly increasing");
    const std::int64_t apex = symmetric_bottom_apex(bottom);
    if (bottom.size() == 1) return 1;
    std::vector<Row> stack{bottom};
    return count_symmetric_rec(stack, apex);
}

}  // namespace gtc
