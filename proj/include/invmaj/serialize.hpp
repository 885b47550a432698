#pragma once

/**
 * @file serialize.hpp
 * @brief JSON, aligned-text and CSV renderings of library values.
 *
 * JSON field names match the struct members. Shapes are written in bracket
 * form (`[4,3,1,1]`), polynomials as arrays of decimal coefficient strings.
 */

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "majrange.hpp"
#include "partition.hpp"
#include "permutation.hpp"
#include "qpoly.hpp"
#include "tableau.hpp"

namespace invmaj {

using nlohmann::json;

inline void to_json(json& j, Partition const& p) { j = to_string(p); }
inline void from_json(json const& j, Partition& p) { p = parse_partition(j.get<std::string>()); }

inline void to_json(json& j, StandardTableau const& t) { j = to_string(t); }
inline void from_json(json const& j, StandardTableau& t) { t = parse_tableau(j.get<std::string>()); }

inline void to_json(json& j, Permutation const& p) { j = to_string(p); }
inline void from_json(json const& j, Permutation& p) { p = parse_permutation(j.get<std::string>()); }

inline void to_json(json& j, QPolynomial const& p) {
    j = json::array();
    for (auto const& c : p.coefficients()) j.push_back(c.str());
}
inline void from_json(json const& j, QPolynomial& p) {
    std::vector<BigInt> c;
    for (auto const& v : j) c.emplace_back(v.get<std::string>());
    p = QPolynomial(std::move(c));
}

inline void to_json(json& j, MajBounds const& b) { j = json{{"m", b.m}, {"big_m", b.big_m}}; }
inline void from_json(json const& j, MajBounds& b) {
    j.at("m").get_to(b.m);
    j.at("big_m").get_to(b.big_m);
}

inline void to_json(json& j, TraceEntry const& e) {
    json notes = json::array();
    for (auto n : e.notes) notes.push_back(std::string(note_name(n)));
    j = json{{"index", e.index},
             {"shape", e.shape},
             {"bounds", e.bounds},
             {"step_used", std::string(step_name(e.step_used))},
             {"notes", notes}};
}
inline void from_json(json const& j, TraceEntry& e) {
    j.at("index").get_to(e.index);
    j.at("shape").get_to(e.shape);
    j.at("bounds").get_to(e.bounds);
    e.step_used = parse_step(j.at("step_used").get<std::string>());
    e.notes.clear();
    if (j.contains("notes"))
        for (auto const& n : j.at("notes")) e.notes.push_back(parse_note(n.get<std::string>()));
}

inline void to_json(json& j, VerificationReport const& r) {
    j = json{{"n", r.n},
             {"k", r.k},
             {"r", r.r},
             {"predicted_min", r.predicted_min},
             {"predicted_max", r.predicted_max},
             {"predicted_missing", r.predicted_missing},
             {"observed_values", r.observed_values},
             {"verdict", r.verdict},
             {"method", std::string(method_name(r.method))},
             {"empty_class", r.empty_class}};
}
inline void from_json(json const& j, VerificationReport& r) {
    j.at("n").get_to(r.n);
    j.at("k").get_to(r.k);
    j.at("r").get_to(r.r);
    j.at("predicted_min").get_to(r.predicted_min);
    j.at("predicted_max").get_to(r.predicted_max);
    j.at("predicted_missing").get_to(r.predicted_missing);
    j.at("observed_values").get_to(r.observed_values);
    j.at("verdict").get_to(r.verdict);
    r.method = parse_method(j.at("method").get<std::string>());
    r.empty_class = j.value("empty_class", false);
}

inline void to_json(json& j, ClassBounds const& c) {
    j = json{{"n", c.n},
             {"k", c.k},
             {"r", c.r},
             {"min", c.bounds.m},
             {"max", c.bounds.big_m},
             {"min_shape", c.min_shape},
             {"max_shape", c.max_shape}};
}

namespace text {

inline std::string join(std::vector<std::int64_t> const& v, std::string_view sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

inline std::string join(std::vector<int> const& v, std::string_view sep = ",") {
    return join(std::vector<std::int64_t>(v.begin(), v.end()), sep);
}

/// Compresses sorted values into runs: `2,4,6` or `4..36`.
inline std::string runs(std::vector<std::int64_t> const& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j + 1 < v.size() && v[j + 1] == v[j] + 1) ++j;
        if (!s.empty()) s += ',';
        s += std::to_string(v[i]);
        if (j > i + 1)
            s += ".." + std::to_string(v[j]);
        else if (j == i + 1)
            s += ',' + std::to_string(v[j]);
        i = j + 1;
    }
    return s;
}

inline std::string set(std::vector<std::int64_t> const& v) { return "{" + runs(v) + "}"; }

inline std::string notes(TraceEntry const& e) {
    std::string s;
    for (auto n : e.notes) {
        if (!s.empty()) s += ';';
        s += note_name(n);
    }
    return s;
}

/// Aligned table with one row per entry: i, shape, min, max, step.
inline std::string trace_table(std::vector<TraceEntry> const& trace) {
    std::size_t shape_w = 5;
    for (auto const& e : trace) shape_w = std::max(shape_w, to_string(e.shape).size());
    std::ostringstream os;
    os << std::left << std::setw(4) << "i" << std::setw(static_cast<int>(shape_w) + 2) << "shape" << std::right
       << std::setw(6) << "min" << std::setw(6) << "max" << "  " << std::left << std::setw(6) << "step"
       << "label\n";
    for (auto const& e : trace) {
        os << std::left << std::setw(4) << e.index << std::setw(static_cast<int>(shape_w) + 2) << to_string(e.shape)
           << std::right << std::setw(6) << e.bounds.m << std::setw(6) << e.bounds.big_m << "  " << std::left
           << std::setw(6) << step_code(e.step_used) << step_name(e.step_used);
        if (!e.notes.empty()) os << "  [" << notes(e) << "]";
        os << '\n';
    }
    return os.str();
}

inline std::string report(VerificationReport const& r) {
    std::ostringstream os;
    os << "n=" << r.n << " r=" << r.r << " k=" << r.k << " method=" << method_name(r.method) << ": ";
    if (r.empty_class) {
        os << "empty conjugacy class\n";
        return os.str();
    }
    os << "predicted [" << r.predicted_min << "," << r.predicted_max << "]";
    if (!r.predicted_missing.empty()) os << " \\ " << set(r.predicted_missing);
    os << ", observed " << set(r.observed_values) << " -> " << (r.verdict ? "OK" : "FAIL") << '\n';
    return os.str();
}

}  // namespace text

namespace csv {

inline std::string quote(std::string const& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

inline constexpr std::string_view kTraceHeader = "i,shape,min,max,step,label,notes";
inline constexpr std::string_view kReportHeader =
    "n,k,r,method,predicted_min,predicted_max,predicted_missing,observed_values,verdict";
inline constexpr std::string_view kRangeHeader = "n,k,r,min,max,min_shape,max_shape,missing";
inline constexpr std::string_view kPolyHeader = "exponent,coefficient";

inline std::string trace_row(TraceEntry const& e) {
    return std::to_string(e.index) + ',' + quote(to_string(e.shape)) + ',' + std::to_string(e.bounds.m) + ',' +
           std::to_string(e.bounds.big_m) + ',' + std::string(step_code(e.step_used)) + ',' +
           std::string(step_name(e.step_used)) + ',' + quote(text::notes(e));
}

inline std::string report_row(VerificationReport const& r) {
    return std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + std::to_string(r.r) + ',' +
           std::string(method_name(r.method)) + ',' + std::to_string(r.predicted_min) + ',' +
           std::to_string(r.predicted_max) + ',' + quote(text::join(r.predicted_missing, ";")) + ',' +
           quote(text::runs(r.observed_values)) + ',' + (r.verdict ? "true" : "false");
}

}  // namespace csv

}  // namespace invmaj
