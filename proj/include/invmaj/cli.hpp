#pragma once

/**
 * @file cli.hpp
 * @brief The `invmaj` command line: maj-poly, range, trace, verify, rsk.
 *
 * Exit codes: 0 success (all verdicts true), 1 a verification failed,
 * 2 usage error. run() writes only to the given streams so the whole
 * surface can be driven from tests.
 */

#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "majrange.hpp"
#include "permutation.hpp"
#include "qpoly.hpp"
#include "serialize.hpp"

namespace invmaj::cli {

enum class OutputFormat { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default caps on `verify`; --max-n-unsafe replaces them.
inline constexpr int kMaxSytN = 16;
inline constexpr int kMaxInvolutionN = 12;

class usage_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void render_maj_poly(Partition const& shape, OutputFormat fmt, std::ostream& out) {
    auto poly = stanley_maj_poly(shape);
    switch (fmt) {
        case OutputFormat::text: out << to_string(poly) << '\n'; break;
        case OutputFormat::json: out << json{{"shape", shape}, {"coefficients", poly}}.dump() << '\n'; break;
        case OutputFormat::csv:
            out << csv::kPolyHeader << '\n';
            for (std::size_t k = 0; k < poly.coefficients().size(); ++k)
                if (poly.coefficients()[k] != 0) out << k << ',' << poly.coefficients()[k].str() << '\n';
            break;
    }
}

inline void check_class(int n, int r) {
    if (n < 1) throw usage_error("--n must be at least 1");
    if (class_is_empty(n, r)) throw usage_error(empty_class_error(n, r).what());
}

inline void render_range(int n, int r, OutputFormat fmt, std::ostream& out) {
    check_class(n, r);
    auto cb = class_bounds(n, r);
    auto missing = missing_values(n, r);
    switch (fmt) {
        case OutputFormat::text:
            out << "n=" << n << " r=" << r << " k=" << cb.k << '\n'
                << "min " << cb.bounds.m << " at " << to_string(cb.min_shape) << '\n'
                << "max " << cb.bounds.big_m << " at " << to_string(cb.max_shape) << '\n'
                << "missing " << text::set(missing) << '\n';
            break;
        case OutputFormat::json: {
            json j = cb;
            j["missing"] = missing;
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << csv::kRangeHeader << '\n'
                << n << ',' << cb.k << ',' << r << ',' << cb.bounds.m << ',' << cb.bounds.big_m << ','
                << csv::quote(to_string(cb.min_shape)) << ',' << csv::quote(to_string(cb.max_shape)) << ','
                << csv::quote(text::join(missing, ";")) << '\n';
            break;
    }
}

inline void render_trace(int n, int r, OutputFormat fmt, std::ostream& out) {
    check_class(n, r);
    TraceCursor cursor(n, r);
    switch (fmt) {
        case OutputFormat::text: out << text::trace_table(algorithm_trace(n, r)); break;
        case OutputFormat::json: {
            json arr = json::array();
            while (auto e = cursor.next()) arr.push_back(*e);
            out << arr.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << csv::kTraceHeader << '\n';
            while (auto e = cursor.next()) out << csv::trace_row(*e) << '\n';
            break;
    }
}

inline int run_verify(int n, std::optional<int> r, Method method, std::optional<int> cap_override, OutputFormat fmt,
                      std::ostream& out) {
    if (n < 1) throw usage_error("--n must be at least 1");
    int cap = cap_override.value_or(method == Method::Syt ? kMaxSytN : kMaxInvolutionN);
    if (n > cap)
        throw usage_error("n=" + std::to_string(n) + " exceeds the " + std::string(method_name(method)) +
                          " enumeration cap of " + std::to_string(cap) + "; pass --max-n-unsafe to raise it");
    std::vector<int> classes;
    if (r) {
        check_class(n, *r);
        classes.push_back(*r);
    } else {
        for (int rr = n % 2; rr <= n; rr += 2) classes.push_back(rr);
    }

    std::vector<VerificationReport> reports;
    for (int rr : classes) reports.push_back(verify_theorem(n, rr, method));
    bool all_ok = std::ranges::all_of(reports, [](auto const& rep) { return rep.verdict; });

    switch (fmt) {
        case OutputFormat::text:
            for (auto const& rep : reports) out << text::report(rep);
            break;
        case OutputFormat::json: out << json(reports).dump() << '\n'; break;
        case OutputFormat::csv:
            out << csv::kReportHeader << '\n';
            for (auto const& rep : reports) out << csv::report_row(rep) << '\n';
            break;
    }
    return all_ok ? kExitOk : kExitVerificationFailed;
}

inline void render_rsk(Permutation const& pi, OutputFormat fmt, std::ostream& out) {
    auto pair = rsk(pi);
    auto des = descent_set(pi);
    auto des_q = descent_set(pair.q);
    std::vector<std::pair<std::string, std::string>> fields{
        {"permutation", to_string(pi)},
        {"P", to_string(pair.p)},
        {"Q", to_string(pair.q)},
        {"shape", to_string(pair.shape())},
        {"des", text::set(std::vector<std::int64_t>(des.begin(), des.end()))},
        {"des_Q", text::set(std::vector<std::int64_t>(des_q.begin(), des_q.end()))},
        {"maj", std::to_string(maj(pi))},
        {"maj_Q", std::to_string(maj(pair.q))},
        {"involution", is_involution(pi) ? "true" : "false"},
        {"fixed_points", std::to_string(fixed_point_count(pi))},
        {"odd_columns", std::to_string(odd_column_count(pair.shape()))},
    };
    switch (fmt) {
        case OutputFormat::text:
            for (auto const& [k, v] : fields) out << std::left << std::setw(13) << k << v << '\n';
            break;
        case OutputFormat::json: {
            json j{{"permutation", pi},
                   {"P", pair.p},
                   {"Q", pair.q},
                   {"shape", pair.shape()},
                   {"des", des},
                   {"des_Q", des_q},
                   {"maj", maj(pi)},
                   {"maj_Q", maj(pair.q)},
                   {"involution", is_involution(pi)},
                   {"fixed_points", fixed_point_count(pi)},
                   {"odd_columns", odd_column_count(pair.shape())}};
            out << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
            out << "field,value\n";
            for (auto const& [k, v] : fields) out << k << ',' << csv::quote(v) << '\n';
            break;
    }
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Major index statistics on involutions, tableaux and shapes", "invmaj"};
    app.require_subcommand(1);

    std::map<std::string, OutputFormat> const formats{
        {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
    OutputFormat fmt = OutputFormat::text;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "Output format")->transform(CLI::CheckedTransformer(formats));
    };

    std::string shape_text;
    auto* poly_cmd = app.add_subcommand("maj-poly", "maj generating polynomial over SYT of a shape");
    poly_cmd->add_option("shape", shape_text, "Shape in bracket form, e.g. [4,3,1,1] or [2^4,1]")->required();
    add_format(poly_cmd);

    int n = 0;
    int fixed = 0;
    std::optional<int> fixed_opt;
    auto* range_cmd = app.add_subcommand("range", "maj range on the involution class with r fixed points");
    range_cmd->add_option("--n", n, "Size of the symmetric group")->required();
    range_cmd->add_option("--fixed-points", fixed, "Number of fixed points r")->required();
    add_format(range_cmd);

    auto* trace_cmd = app.add_subcommand("trace", "shape traversal from (n-k,k) to (r,1^2k)");
    trace_cmd->add_option("--n", n, "Size of the symmetric group")->required();
    trace_cmd->add_option("--fixed-points", fixed, "Number of fixed points r")->required();
    add_format(trace_cmd);

    std::string method_text = "syt";
    std::optional<int> cap;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustively check the maj range of involution classes");
    verify_cmd->add_option("--n", n, "Size of the symmetric group")->required();
    verify_cmd->add_option("--fixed-points", fixed_opt, "Only this class (default: every class)");
    verify_cmd->add_option("--method", method_text, "Enumeration source")->check(CLI::IsMember({"syt", "involutions"}));
    verify_cmd->add_option("--max-n-unsafe", cap, "Override the enumeration size cap");
    add_format(verify_cmd);

    std::string perm_text;
    auto* rsk_cmd = app.add_subcommand("rsk", "RSK tableaux and descent statistics of a permutation");
    rsk_cmd->add_option("permutation", perm_text, "One-line word (5,3,2,1,4,7,6) or cycles ((1 2)(3 4))")
        ->required();
    add_format(rsk_cmd);

    std::vector<char const*> argv{"invmaj"};
    for (auto const& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kExitOk;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*poly_cmd) {
            detail::render_maj_poly(parse_partition(shape_text), fmt, out);
        } else if (*range_cmd) {
            detail::render_range(n, fixed, fmt, out);
        } else if (*trace_cmd) {
            detail::render_trace(n, fixed, fmt, out);
        } else if (*verify_cmd) {
            return detail::run_verify(n, fixed_opt, parse_method(method_text), cap, fmt, out);
        } else if (*rsk_cmd) {
            detail::render_rsk(parse_permutation(perm_text), fmt, out);
        }
    } catch (parse_error const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (usage_error const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::invalid_argument const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::out_of_range const& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace invmaj::cli
