#include "gtcount/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gtcount/enumeration.hpp"
#include "gtcount/formulas.hpp"
#include "gtcount/patterns.hpp"
#include "gtcount/sweeps.hpp"
#include "gtcount/testhooks.hpp"
#include "gtcount/verifier.hpp"

namespace gtc {

namespace {

// Counting routes disagreeing, or an identity failing: exit code 2.
struct MismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Int halved_count_by_method(const std::string& method, std::size_t rows, const Row& x) {
    const std::size_t k = x.size();
    if (method == "bruteforce") return count_halved_bruteforce(rows, x);
    if (method == "recursion") return count_halved(rows, x);
    const auto point = to_rat_point(x);
    Rat v;
    if (method == "formula")
        v = rows % 2 == 1 ? o_formula(point, k) : e_formula(point, k);
    else if (method == "determinant")
        v = rows % 2 == 1 ? o_det(point, k) : e_det(point, k);
    else
        throw std::invalid_argument("unknown method '" + method + "'");
    if (!is_integer(v))
        throw MismatchError("method " + method + " produced non-integral count " + v.str());
    return numerator(v);
}

int cmd_count_gt(const std::string& bottom_str) {
    const Row bottom = parse_row(bottom_str);
    require_gt_bottom(bottom);
    const Int dp = count_gt(bottom);
    const Int pf = gt_product_formula(bottom);
    if (dp != pf)
        throw MismatchError("count gt: dynamic programming gives " + dp.str() +
                            " but the product formula gives " + pf.str());
    std::cout << dp << "\n";
    return 0;
}

int cmd_count_halved(std::int64_t rows, const std::string& bottom_str,
                     const std::string& method) {
    if (rows < 1) throw std::invalid_argument("--rows must be >= 1");
    const Row bottom = parse_row(bottom_str);
    const auto n = static_cast<std::size_t>(rows);
    if (method != "all") {
        std::cout << halved_count_by_method(method, n, bottom) << "\n";
        return 0;
    }
    const char* methods[] = {"bruteforce", "recursion", "formula", "determinant"};
    std::vector<Int> values;
    for (const char* m : methods) {
        values.push_back(halved_count_by_method(m, n, bottom));
        std::cout << m << " " << values.back() << "\n";
    }
    for (const Int& v : values)
        if (v != values.front())
            throw MismatchError("count halved: methods disagree");
    return 0;
}

int cmd_count_symmetric(const std::string& bottom_str) {
    std::cout << count_symmetric_direct(parse_row(bottom_str)) << "\n";
    return 0;
}

template <typename Pattern>
void emit_patterns(const std::vector<Pattern>& ps, bool truncated,
                   const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["patterns"] = nlohmann::json::array();
        for (const auto& p : ps) j["patterns"].push_back(to_json(p));
        j["count"] = ps.size();
        j["truncated"] = truncated;
        std::cout << j.dump() << "\n";
        return;
    }
    for (const auto& p : ps) std::cout << to_text(p) << "--\n";
    if (truncated) std::cerr << "note: output truncated at " << ps.size() << " patterns\n";
}

int cmd_enumerate_gt(const std::string& bottom_str, std::size_t limit,
                     const std::string& format) {
    const Row bottom = parse_row(bottom_str);
    auto ps = enumerate_gt_all(bottom, limit);
    emit_patterns(ps, ps.size() == limit, format);
    return 0;
}

int cmd_enumerate_halved(std::int64_t rows, const std::string& bottom_str,
                         std::size_t limit, const std::string& format) {
    if (rows < 1) throw std::invalid_argument("--rows must be >= 1");
    const Row bottom = parse_row(bottom_str);
    auto ps = enumerate_halved_all(static_cast<std::size_t>(rows), bottom, limit);
    emit_patterns(ps, ps.size() == limit, format);
    return 0;
}

int cmd_encode(const std::string& input, const std::string& format) {
    const std::string text = read_file(input);
    const GTPattern p = format == "json" ? gt_from_json(nlohmann::json::parse(text))
                                         : gt_from_text(text);
    const EncodedSymmetric enc = encode_symmetric(p);
    if (format == "json") {
        nlohmann::json j = to_json(enc.half);
        j["apex"] = enc.apex;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "apex " << enc.apex << "\n" << to_text(enc.half);
    }
    return 0;
}

int cmd_decode(std::int64_t apex, const std::string& input, const std::string& format) {
    const std::string text = read_file(input);
    const HalvedGTPattern h = format == "json"
                                  ? halved_from_json(nlohmann::json::parse(text))
                                  : halved_from_text(text);
    const GTPattern p = decode_halved(apex, h);
    if (format == "json")
        std::cout << to_json(p).dump() << "\n";
    else
        std::cout << to_text(p);
    return 0;
}

void print_report_text(const IdentityReport& r) {
    std::cout << r.identity << " k=" << r.k;
    if (r.verified)
        std::cout << " verified\n";
    else
        std::cout << " FAILED witness=" << r.witness->str() << "\n";
}

nlohmann::json report_to_json(const IdentityReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["k"] = r.k;
    j["verified"] = r.verified;
    if (r.witness) j["witness"] = r.witness->str();
    return j;
}

int cmd_verify(std::size_t max_k, const std::string& identity, const std::string& format) {
    std::vector<IdentityReport> reports;
    if (identity.empty()) {
        reports = verify_all(max_k);
    } else {
        for (std::size_t k = identity_min_k(identity); k <= max_k; ++k)
            reports.push_back(verify_identity(identity, k));
    }
    bool all_ok = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(report_to_json(r));
        std::cout << j.dump() << "\n";
    }
    for (const auto& r : reports) {
        if (format != "json") print_report_text(r);
        all_ok = all_ok && r.verified;
    }
    return all_ok ? 0 : 2;
}

class Section {
public:
    explicit Section(const std::string& name)
        : name_(name), start_(std::chrono::steady_clock::now()) {}

    // Prints one line per section; returns whether the section passed.
    bool finish(std::size_t checks, std::size_t failures) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start_)
                            .count();
        if (failures == 0)
            std::cout << "ok   " << name_ << " (" << checks << " checks, " << ms << " ms)\n";
        else
            std::cout << "FAIL " << name_ << " (" << failures << " of " << checks
                      << " checks failed, " << ms << " ms)\n";
        return failures == 0;
    }

private:
    std::string name_;
    std::chrono::steady_clock::time_point start_;
};

bool selftest_first_instances(std::int64_t max_x1) {
    Section section("first instances");
    std::size_t checks = 0, failures = 0;
    for (std::int64_t x1 = 1; x1 <= max_x1; ++x1) {
        ++checks;
        if (count_halved_odd({x1}) != Int(x1)) ++failures;
        for (std::int64_t x2 = 1; x2 < x1; ++x2) {
            checks += 2;
            const Rat o_expect =
                Rat(1, 6) * Rat(x1) * Rat(x2) * Rat(x1 - x2) * Rat(x1 + x2);
            const Rat e_expect = Rat(1, 2) * Rat(x1 - x2) * Rat(x2 + x1 - 1);
            if (Rat(count_halved_odd({x1, x2})) != o_expect) ++failures;
            if (Rat(count_halved_even({x1, x2})) != e_expect) ++failures;
        }
    }
    return section.finish(checks, failures);
}

bool selftest_halved_agreement(bool quick, bool serial) {
    Section section("halved pattern counts, four routes");
    auto xs = decreasing_rows(1, quick ? 2 : 3, quick ? 5 : 8);
    if (!quick) {
        xs.push_back({7, 6, 4, 1});
        xs.push_back({6, 5, 3, 2});
        xs.push_back({8, 6, 4, 2});
    }
    const auto results = halved_agreement_sweep(xs, !serial);
    std::size_t failures = 0;
    for (const auto& r : results) {
        if (r.agree()) continue;
        ++failures;
        if (failures <= 5)
            std::cerr << "disagreement at x=(" << row_to_string(r.x) << "), rows=" << r.rows
                      << ": bruteforce=" << r.bruteforce << " recursion=" << r.recursion
                      << " formula=" << r.formula << " determinant=" << r.determinant
                      << "\n";
    }
    return section.finish(results.size(), failures);
}

bool selftest_gt_agreement(bool quick, bool serial) {
    Section section("GT pattern counts, two routes");
    auto us = increasing_rows(1, quick ? 3 : 4, quick ? 5 : 8);
    if (!quick) us.push_back({2, 7, 10, 11, 17});
    const auto results = gt_agreement_sweep(us, !serial);
    std::size_t failures = 0;
    for (const auto& r : results) {
        if (r.agree()) continue;
        ++failures;
        if (failures <= 5)
            std::cerr << "disagreement at u=(" << row_to_string(r.u) << "): dp=" << r.dp
                      << " formula=" << r.formula << "\n";
    }
    return section.finish(results.size(), failures);
}

bool selftest_symmetric(bool quick) {
    Section section("symmetric counts against the halved encoding");
    std::size_t checks = 0, failures = 0;

    auto check_row = [&](const Row& bottom) {
        ++checks;
        const Int direct = count_symmetric_direct(bottom);
        const std::size_t n = bottom.size();
        if (n == 1) {
            if (direct != 1) ++failures;
            return;
        }
        // Any symmetric pattern with this bottom row encodes to a halved
        // pattern with the same derived bottom row, so compare counts.
        const std::int64_t apex = symmetric_bottom_apex(bottom);
        Row half(n / 2);
        const std::int64_t base = apex + static_cast<std::int64_t>((n - 1) / 2);
        for (std::size_t j = 1; j <= n / 2; ++j) half[j - 1] = bottom[n - j] - base;
        const Int via_halved = count_halved(n, half);
        if (direct != via_halved) {
            ++failures;
            std::cerr << "symmetric mismatch at (" << row_to_string(bottom)
                      << "): direct=" << direct << " halved=" << via_halved << "\n";
        }
    };

    if (quick) {
        check_row({2});
        check_row({1, 4});
        check_row({1, 3, 5});
        check_row({1, 3, 4, 6});
    } else {
        check_row({1, 2, 4, 7, 8, 11, 13, 14});  // the 8-row showcase
        check_row({0, 2, 3, 5});
        check_row({3, 5, 6, 8});
        check_row({1, 2, 5, 6});
        check_row({1, 3, 4, 5, 7});
        // shift invariance
        ++checks;
        if (count_symmetric_direct({0, 2, 3, 5}) != count_symmetric_direct({3, 5, 6, 8}))
            ++failures;
    }
    return section.finish(checks, failures);
}

bool selftest_verifier(std::size_t k_max) {
    Section section("symbolic identities");
    const auto reports = verify_all(k_max);
    std::size_t failures = 0;
    for (const auto& r : reports) {
        if (r.verified) continue;
        ++failures;
        if (failures <= 5)
            std::cerr << "identity " << r.identity << " failed at k=" << r.k
                      << ", witness " << r.witness->str() << "\n";
    }
    return section.finish(reports.size(), failures);
}

int cmd_selftest(bool quick, bool serial, const std::string& perturb) {
    if (!perturb.empty()) {
        const auto fault = testhooks::fault_from_name(perturb);
        if (!fault) throw std::invalid_argument("unknown fault '" + perturb + "'");
        testhooks::inject(*fault);
        std::cout << "fault injected: " << perturb << "\n";
    }
    bool ok = true;
    ok &= selftest_first_instances(quick ? 5 : 10);
    ok &= selftest_halved_agreement(quick, serial);
    ok &= selftest_gt_agreement(quick, serial);
    ok &= selftest_symmetric(quick);
    ok &= selftest_verifier(quick ? 2 : 4);
    testhooks::clear();
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Exact counting and enumeration of Gelfand-Tsetlin patterns,\n"
                 "symmetric patterns, and their halved encodings."};
    app.require_subcommand(1);

    struct {
        std::string bottom;
        std::string method = "recursion";
        std::string format = "text";
        std::string identity;
        std::string perturb;
        std::int64_t rows = 0;
        std::int64_t apex = 0;
        std::size_t limit = 10000;
        std::size_t max_k = 4;
        std::string input;
        bool quick = false;
        bool serial = false;
    } opt;

    int rc = 0;

    auto* count = app.add_subcommand("count", "Count patterns with a fixed bottom row");
    count->require_subcommand(1);
    auto* count_gt_cmd =
        count->add_subcommand("gt", "GT patterns (dynamic programming + product formula)");
    count_gt_cmd->add_option("--bottom", opt.bottom, "comma-separated bottom row")
        ->required();
    count_gt_cmd->callback([&] { rc = cmd_count_gt(opt.bottom); });

    auto* count_halved_cmd = count->add_subcommand("halved", "halved patterns");
    count_halved_cmd->add_option("--rows", opt.rows, "number of rows (2k or 2k+1)")
        ->required();
    count_halved_cmd->add_option("--bottom", opt.bottom,
                                 "bottom row, read from the right, strictly decreasing");
    count_halved_cmd
        ->add_option("--method", opt.method, "counting route (default: recursion)")
        ->check(CLI::IsMember({"bruteforce", "recursion", "formula", "determinant", "all"}));
    count_halved_cmd->callback([&] { rc = cmd_count_halved(opt.rows, opt.bottom, opt.method); });

    auto* count_sym_cmd = count->add_subcommand("symmetric", "symmetric GT patterns");
    count_sym_cmd->add_option("--bottom", opt.bottom, "mirror-symmetric bottom row")
        ->required();
    count_sym_cmd->callback([&] { rc = cmd_count_symmetric(opt.bottom); });

    auto* enumerate = app.add_subcommand("enumerate", "List patterns with a fixed bottom row");
    enumerate->require_subcommand(1);
    auto* enum_gt_cmd = enumerate->add_subcommand("gt", "GT patterns");
    enum_gt_cmd->add_option("--bottom", opt.bottom, "comma-separated bottom row")->required();
    enum_gt_cmd->add_option("--limit", opt.limit, "maximum number of patterns");
    enum_gt_cmd->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    enum_gt_cmd->callback([&] { rc = cmd_enumerate_gt(opt.bottom, opt.limit, opt.format); });

    auto* enum_halved_cmd = enumerate->add_subcommand("halved", "halved patterns");
    enum_halved_cmd->add_option("--rows", opt.rows, "number of rows")->required();
    enum_halved_cmd->add_option("--bottom", opt.bottom, "bottom row");
    enum_halved_cmd->add_option("--limit", opt.limit, "maximum number of patterns");
    enum_halved_cmd->add_option("--format", opt.format)
        ->check(CLI::IsMember({"text", "json"}));
    enum_halved_cmd->callback(
        [&] { rc = cmd_enumerate_halved(opt.rows, opt.bottom, opt.limit, opt.format); });

    auto* encode = app.add_subcommand("encode", "Encode a symmetric pattern as apex + half");
    encode->add_option("--input", opt.input, "pattern file")->required();
    encode->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    encode->callback([&] { rc = cmd_encode(opt.input, opt.format); });

    auto* decode = app.add_subcommand("decode", "Rebuild a symmetric pattern from apex + half");
    decode->add_option("--apex", opt.apex, "top entry")->required();
    decode->add_option("--input", opt.input, "halved pattern file")->required();
    decode->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    decode->callback([&] { rc = cmd_decode(opt.apex, opt.input, opt.format); });

    auto* verify = app.add_subcommand("verify", "Check the symbolic identities");
    verify->add_option("--max-k", opt.max_k, "largest k to verify (default 4)");
    verify->add_option("--identity", opt.identity, "run a single identity family")
        ->check(CLI::IsMember(identity_names()));
    verify->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
    verify->callback([&] { rc = cmd_verify(opt.max_k, opt.identity, opt.format); });

    auto* selftest = app.add_subcommand("selftest", "Run the full cross-method sweeps");
    selftest->add_flag("--quick", opt.quick, "small ranges, finishes in seconds");
    selftest->add_flag("--serial", opt.serial, "disable OpenMP in the sweeps");
    selftest
        ->add_option("--perturb", opt.perturb,
                     "inject a deliberate fault (test hook); selftest must then fail")
        ->check(CLI::IsMember({"o-formula-denominator", "e-formula-denominator",
                               "o-det-exponent", "e-det-exponent", "o-det-denominator",
                               "e-det-denominator"}));
    selftest->callback([&] { rc = cmd_selftest(opt.quick, opt.serial, opt.perturb); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const MismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace gtc
