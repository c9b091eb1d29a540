#include "gtcount/numeric.hpp"

#include <sstream>

namespace gtc {

std::string row_to_string(const Row& r, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out << sep;
        out << r[i];
    }
    return out.str();
}

Row parse_row(const std::string& text) {
    Row row;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        // strip surrounding whitespace
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            if (row.empty() && in.eof()) break;  // "" -> empty row
            throw std::invalid_argument("parse_row: empty entry in '" + text + "'");
        }
        std::size_t used = 0;
        long long v;
        try {
            v = std::stoll(item.substr(b, e - b + 1), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_row: bad integer '" + item + "'");
        }
        if (used != e - b + 1)
            throw std::invalid_argument("parse_row: bad integer '" + item + "'");
        row.push_back(v);
    }
    return row;
}

}  // namespace gtc
