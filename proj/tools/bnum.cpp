// bnum: command-line front end for the bernoulli library.
//
// Subcommands: bern, sumpow, frac, denom, series, irregular, estimate.
// Every command prints either the exact text format or JSON (--json).
// Exit codes: 0 success, 1 internal computation failure, 2 usage error.

#include "bernoulli/bernoulli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using bernoulli::BigInt;
using bernoulli::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

json rational_json(const Rational& r) {
    return json{{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

void print_json(const json& j) { std::cout << j.dump() << "\n"; }

BigInt parse_big_uint(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw usage_error(std::string(what) + " must be a non-negative integer");
    return BigInt(text);
}

// "a..b" (inclusive) or a single index
struct IndexRange {
    std::int64_t first = 0;
    std::int64_t last = 0;
    bool is_range = false;
};

IndexRange parse_index_spec(const std::string& spec) {
    const auto parse_one = [](const std::string& text) {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
            text.size() > 9)
            throw usage_error("index must be a non-negative integer");
        return static_cast<std::int64_t>(std::stoll(text));
    };
    IndexRange range;
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
        range.first = range.last = parse_one(spec);
        return range;
    }
    range.is_range = true;
    range.first = parse_one(spec.substr(0, dots));
    range.last = parse_one(spec.substr(dots + 2));
    if (range.first > range.last) throw usage_error("malformed range: first index exceeds last");
    return range;
}

int run_bern(const std::string& index_spec, const std::string& method, bool json_mode) {
    const IndexRange range = parse_index_spec(index_spec);
    const auto compute = [&method](std::int64_t n,
                                   const bernoulli::BernoulliTable* table) -> Rational {
        if (method == "recurrence")
            return table ? (*table)[n] : bernoulli::bernoulli_recurrence(n);
        if (method == "double-sum") return bernoulli::bernoulli_double_sum(n);
        // zeta method handles only even n >= 2; anything else is a usage error
        if (n < 2 || (n & 1))
            throw usage_error("the zeta method needs an even index >= 2");
        return bernoulli::bernoulli_zeta(n);
    };

    // one shared table amortizes the recurrence across a range
    std::optional<bernoulli::BernoulliTable> table;
    if (range.is_range && method == "recurrence")
        table.emplace(bernoulli::bernoulli_table(range.last));

    if (!range.is_range) {
        const Rational value = compute(range.first, nullptr);
        if (json_mode)
            print_json(rational_json(value));
        else
            std::cout << value.to_string() << "\n";
        return kExitOk;
    }

    json array = json::array();
    for (std::int64_t n = range.first; n <= range.last; ++n) {
        const Rational value = compute(n, table ? &*table : nullptr);
        if (json_mode)
            array.push_back(json{{"n", n}, {"value", rational_json(value)}});
        else
            std::cout << "B_" << n << " = " << value.to_string() << "\n";
    }
    if (json_mode) print_json(array);
    return kExitOk;
}

int run_sumpow(const std::string& n_text, std::int64_t r, bool inclusive, bool json_mode) {
    const BigInt n = parse_big_uint(n_text, "n");
    if (r < 0) throw usage_error("r must be non-negative");
    const BigInt total = inclusive ? bernoulli::power_sum_inclusive(n, r)
                                   : bernoulli::power_sum_exclusive(n, r);
    if (json_mode)
        print_json(rational_json(Rational(total)));
    else
        std::cout << total.str() << "\n";
    return kExitOk;
}

int run_frac(std::int64_t two_k, bool json_mode) {
    const Rational frac = bernoulli::sc_fractional_part(two_k);
    if (json_mode)
        print_json(rational_json(frac));
    else
        std::cout << frac.to_string() << "\n";
    return kExitOk;
}

int run_denom(std::int64_t two_k, bool json_mode) {
    const BigInt d = bernoulli::sc_denominator(two_k);
    if (json_mode)
        print_json(rational_json(Rational(d)));
    else
        std::cout << d.str() << "\n";
    return kExitOk;
}

int run_series(const std::string& tag_name, std::int64_t max_order, bool json_mode) {
    const bernoulli::FunctionTag tag = bernoulli::parse_function_tag(tag_name);
    if (max_order < 1) throw usage_error("max order must be >= 1");
    std::int64_t first = 0;
    if (tag == bernoulli::FunctionTag::coth || tag == bernoulli::FunctionTag::cot) first = -1;
    if (tag == bernoulli::FunctionTag::tanh || tag == bernoulli::FunctionTag::tan) first = 1;

    json array = json::array();
    for (std::int64_t m = first; m <= max_order; ++m) {
        const Rational c = bernoulli::expansion_coeff(tag, m);
        if (c.is_zero()) continue;
        if (json_mode)
            array.push_back(json{{"order", m}, {"coeff", rational_json(c)}});
        else
            std::cout << "x^" << m << ": " << c.to_string() << "\n";
    }
    if (json_mode) print_json(array);
    return kExitOk;
}

int run_irregular(std::int64_t limit, bool json_mode) {
    if (limit < 0) throw usage_error("limit must be non-negative");
    const auto pairs = bernoulli::irregular_primes_up_to(limit);
    // group consecutive pairs sharing a prime; input is ordered by (p, index)
    std::vector<std::pair<BigInt, std::vector<std::int64_t>>> grouped;
    for (const auto& pair : pairs) {
        if (grouped.empty() || grouped.back().first != pair.p)
            grouped.push_back({pair.p, {}});
        grouped.back().second.push_back(pair.index);
    }
    json array = json::array();
    for (const auto& [p, indices] : grouped) {
        if (json_mode) {
            array.push_back(json{{"p", p.str()}, {"indices", indices}});
        } else {
            std::cout << "p=" << p.str() << " irregular indices=[";
            for (std::size_t i = 0; i < indices.size(); ++i)
                std::cout << (i ? "," : "") << indices[i];
            std::cout << "]\n";
        }
    }
    if (json_mode) print_json(array);
    return kExitOk;
}

int run_estimate(std::int64_t two_k, bool json_mode) {
    const bernoulli::FixedReal est = bernoulli::bernoulli_estimate(two_k);
    const std::size_t digits = est.default_decimal_digits();
    if (json_mode)
        print_json(json{{"two_k", two_k},
                        {"decimal", est.to_decimal_string(digits)},
                        {"digits", digits},
                        {"scale_bits", est.scale_bits()}});
    else
        std::cout << est.to_decimal_string(digits) << " (" << digits << " digits)\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) try {
    CLI::App app{"exact Bernoulli numbers, power sums, series coefficients, "
                 "and irregular-prime scans"};
    app.require_subcommand(1);

    std::string bern_index;
    std::string bern_method = "recurrence";
    auto* bern = app.add_subcommand("bern", "Bernoulli number B_n, or a range a..b");
    bern->add_option("index", bern_index, "index n, or inclusive range a..b")->required();
    bern->add_option("--method", bern_method, "recurrence | double-sum | zeta")
        ->check(CLI::IsMember({"recurrence", "double-sum", "zeta"}));

    std::string sumpow_n;
    std::int64_t sumpow_r = 0;
    bool sumpow_inclusive = false;
    bool sumpow_exclusive = false;
    auto* sumpow = app.add_subcommand("sumpow", "power sum over k^r");
    sumpow->add_option("n", sumpow_n, "upper bound")->required();
    sumpow->add_option("r", sumpow_r, "exponent")->required();
    auto* incl = sumpow->add_flag("--inclusive", sumpow_inclusive, "sum k = 1..n");
    sumpow->add_flag("--exclusive", sumpow_exclusive, "sum k = 1..n-1 (default)")
        ->excludes(incl);

    std::int64_t frac_index = 0;
    auto* frac = app.add_subcommand("frac", "fractional part of B_2k (in [0,1))");
    frac->add_option("two_k", frac_index, "even index >= 2")->required();

    std::int64_t denom_index = 0;
    auto* denom = app.add_subcommand("denom", "exact denominator of B_2k");
    denom->add_option("two_k", denom_index, "even index >= 2")->required();

    std::string series_tag;
    std::int64_t series_order = 1;
    auto* series = app.add_subcommand("series", "expansion coefficients of a classical function");
    series->add_option("tag", series_tag,
                       "exp_gen | x_coth_half | coth | cot | tanh | tan")
        ->required();
    series->add_option("max_order", series_order, "highest power of x to print")->required();

    std::int64_t irregular_limit = 0;
    auto* irregular = app.add_subcommand("irregular", "irregular primes up to a limit");
    irregular->add_option("limit", irregular_limit, "scan primes p <= limit")->required();

    std::int64_t estimate_index = 0;
    auto* estimate = app.add_subcommand("estimate", "asymptotic size estimate of B_2k");
    estimate->add_option("two_k", estimate_index, "even index >= 2")->required();

    bool json_mode = false;
    for (auto* sub : {bern, sumpow, frac, denom, series, irregular, estimate})
        sub->add_flag("--json", json_mode, "machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bern->parsed()) return run_bern(bern_index, bern_method, json_mode);
        if (sumpow->parsed()) return run_sumpow(sumpow_n, sumpow_r, sumpow_inclusive, json_mode);
        if (frac->parsed()) return run_frac(frac_index, json_mode);
        if (denom->parsed()) return run_denom(denom_index, json_mode);
        if (series->parsed()) return run_series(series_tag, series_order, json_mode);
        if (irregular->parsed()) return run_irregular(irregular_limit, json_mode);
        if (estimate->parsed()) return run_estimate(estimate_index, json_mode);
    } catch (const bernoulli::reconstruction_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
} catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
}
