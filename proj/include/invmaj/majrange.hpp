#pragma once

/**
 * @file majrange.hpp
 * @brief Range of the major index on conjugacy classes of involutions.
 *
 * The class of involutions in S_n with r fixed points (cycle type
 * (2^k, 1^r), n = 2k + r) maps under RSK, maj-preservingly, onto the
 * standard tableaux whose shape has exactly r odd columns. Its maj values
 * fill [k, C(n,2) - C(r,2)], except that for r = 0 the values k+1 and
 * C(n,2)-1 never occur.
 *
 * Besides closed-form bounds and an exhaustive verifier, this header
 * implements the shape traversal that certifies the range: starting at
 * (n-k, k) it moves one or two cells at a time through shapes with r odd
 * columns until it reaches the hook (r, 1^2k), and consecutive shapes have
 * overlapping maj intervals M(lambda) >= m(nu) except at a few annotated
 * boundary steps.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "partition.hpp"
#include "permutation.hpp"
#include "tableau.hpp"

namespace invmaj {

/// Raised for (n, r) with no involutions: r > n, r < 0 or n - r odd.
class empty_class_error : public std::invalid_argument {
public:
    empty_class_error(int n, int r)
        : std::invalid_argument("empty conjugacy class: no involution of S_" + std::to_string(n) + " has " +
                                std::to_string(r) + " fixed points") {}
};

inline bool class_is_empty(int n, int r) { return r < 0 || r > n || (n - r) % 2 != 0; }

struct MajBounds {
    std::int64_t m = 0;
    std::int64_t big_m = 0;

    friend bool operator==(MajBounds const&, MajBounds const&) = default;
};

/// Min and max of maj over SYT(lambda): b(lambda) and C(n,2) - b(lambda').
inline MajBounds shape_bounds(Partition const& lambda) {
    return {b_stat(lambda), choose2(lambda.size()) - b_stat(conjugate(lambda))};
}

/// The maj values taken on SYT(lambda): the whole interval, except that a
/// rectangle with at least two rows and columns misses m+1 and M-1.
inline std::vector<std::int64_t> shape_support(Partition const& lambda) {
    auto [m, big_m] = shape_bounds(lambda);
    bool rect = is_proper_rectangle(lambda);
    std::vector<std::int64_t> out;
    for (auto v = m; v <= big_m; ++v)
        if (!rect || (v != m + 1 && v != big_m - 1)) out.push_back(v);
    return out;
}

/// M - m >= 4, and >= 6 for rectangles. Holds for every shape with n >= 6
/// other than a single row or column; smaller shapes are evaluated as is.
inline bool shape_gap_ok(Partition const& lambda) {
    if (lambda.length() == 1 || lambda.part(0) == 1)
        throw std::invalid_argument("gap bound excludes the single row/column shape " + to_string(lambda));
    auto [m, big_m] = shape_bounds(lambda);
    bool rect = lambda.parts().back() == lambda.part(0);
    return big_m - m >= (rect ? 6 : 4);
}

struct ClassBounds {
    int n = 0;
    int k = 0;
    int r = 0;
    MajBounds bounds;
    Partition min_shape;  ///< (n-k, k)
    Partition max_shape;  ///< (r, 1^2k)
};

inline ClassBounds class_bounds(int n, int r) {
    if (n < 1) throw std::invalid_argument("class bounds need n >= 1");
    if (class_is_empty(n, r)) throw empty_class_error(n, r);
    int k = (n - r) / 2;
    ClassBounds cb;
    cb.n = n;
    cb.k = k;
    cb.r = r;
    cb.bounds = {k, choose2(n) - choose2(r)};
    cb.min_shape = Partition({n - k, k});
    cb.max_shape = r == 0 ? Partition::column(n) : Partition::hook(r, 2 * k);
    return cb;
}

/// Values inside [min, max] that the class never attains: {k+1, C(n,2)-1}
/// for fixed-point-free classes (those strictly inside the interval), else none.
inline std::vector<std::int64_t> missing_values(int n, int r) {
    auto cb = class_bounds(n, r);
    std::vector<std::int64_t> out;
    if (r != 0) return out;
    for (auto v : {static_cast<std::int64_t>(cb.k) + 1, choose2(n) - 1})
        if (v > cb.bounds.m && v < cb.bounds.big_m) out.push_back(v);
    std::ranges::sort(out);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The predicted value set of the class: [min, max] minus missing_values.
inline std::vector<std::int64_t> predicted_values(int n, int r) {
    auto cb = class_bounds(n, r);
    auto missing = missing_values(n, r);
    std::vector<std::int64_t> out;
    for (auto v = cb.bounds.m; v <= cb.bounds.big_m; ++v)
        if (!std::ranges::binary_search(missing, v)) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------------------
// Shape traversal
// ---------------------------------------------------------------------------

enum class AlgorithmStep {
    Terminal_OddHook,       ///< step 1: stop
    EvenHookToOdd,          ///< step 2: end of row 0 -> bottom of column 0
    SingleSquare,           ///< step 3: end of row i -> end of row i+2
    DominoToFirstColumn,    ///< step 4(a): vertical domino -> bottom of column 0
    DominoShift,            ///< step 4(b): vertical domino -> rows i+1, i+2
    DeviationSingleSquare,  ///< (2,2,1^(n-4)) with one odd column: only the lower cell moves
};

inline constexpr AlgorithmStep kAllSteps[] = {
    AlgorithmStep::Terminal_OddHook, AlgorithmStep::EvenHookToOdd,       AlgorithmStep::SingleSquare,
    AlgorithmStep::DominoToFirstColumn, AlgorithmStep::DominoShift, AlgorithmStep::DeviationSingleSquare,
};

inline std::string_view step_name(AlgorithmStep s) {
    switch (s) {
        case AlgorithmStep::Terminal_OddHook: return "Terminal_OddHook";
        case AlgorithmStep::EvenHookToOdd: return "EvenHookToOdd";
        case AlgorithmStep::SingleSquare: return "SingleSquare";
        case AlgorithmStep::DominoToFirstColumn: return "DominoToFirstColumn";
        case AlgorithmStep::DominoShift: return "DominoShift";
        case AlgorithmStep::DeviationSingleSquare: return "DeviationSingleSquare";
    }
    return "?";
}

/// Short step number as printed in the trace table: 1, 2, 3, 4(a), 4(b), 4(a')
inline std::string_view step_code(AlgorithmStep s) {
    switch (s) {
        case AlgorithmStep::Terminal_OddHook: return "1";
        case AlgorithmStep::EvenHookToOdd: return "2";
        case AlgorithmStep::SingleSquare: return "3";
        case AlgorithmStep::DominoToFirstColumn: return "4(a)";
        case AlgorithmStep::DominoShift: return "4(b)";
        case AlgorithmStep::DeviationSingleSquare: return "4(a')";
    }
    return "?";
}

inline AlgorithmStep parse_step(std::string_view name) {
    for (auto s : kAllSteps)
        if (step_name(s) == name) return s;
    throw parse_error("unknown algorithm step", std::string(name));
}

/// Terminal shapes: the odd hook (r, 1^2k), and for r = 0 the even column (1^2k).
inline bool is_terminal_shape(Partition const& lambda) {
    if (lambda.empty() || !is_hook(lambda)) return false;
    return hook_classification(lambda) == HookKind::OddHook || lambda.part(0) == 1;
}

struct StepResult {
    Partition next;
    AlgorithmStep step;
    int pivot = -1;  ///< row index i chosen in steps 3 and 4; -1 for hook steps
};

namespace detail {

inline Partition with_rows(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(std::move(rows));
}

}  // namespace detail

/// One move of the traversal. The result has the same number of odd columns.
/// Throws std::invalid_argument on a terminal shape and std::logic_error if
/// the chosen domino row breaks the structural guarantee lambda_(i-1) = lambda_i.
inline StepResult algorithm_step(Partition const& lambda) {
    if (lambda.empty()) throw std::invalid_argument("the empty shape has no traversal step");
    if (is_terminal_shape(lambda))
        throw std::invalid_argument("shape " + to_string(lambda) + " is terminal; no further step");

    int n = lambda.size();
    int t = lambda.length() - 1;
    auto at = [&](int i) { return lambda.part(i); };

    if (is_hook(lambda)) {
        // even hook (u, 1^(n-u)) with u >= 2 -> (u-1, 1^(n-u+1))
        return {Partition::hook(at(0) - 1, n - at(0) + 1), AlgorithmStep::EvenHookToOdd, -1};
    }

    for (int i = t; i >= 0; --i) {
        if (at(i) > at(i + 1) && at(i + 1) > at(i + 2)) {
            std::vector<int> rows(lambda.vec());
            rows.resize(static_cast<std::size_t>(std::max(t + 1, i + 3)), 0);
            --rows[static_cast<std::size_t>(i)];
            ++rows[static_cast<std::size_t>(i + 2)];
            return {detail::with_rows(std::move(rows)), AlgorithmStep::SingleSquare, i};
        }
    }

    int i = -1;
    for (int j = t; j >= 0; --j) {
        if (at(j) > at(j + 1) && at(j + 1) == at(j + 2) && at(j) > 1) {
            i = j;
            break;
        }
    }
    if (i < 1 || at(i - 1) != at(i))
        throw std::logic_error("domino step found no vertical domino ending in row " + std::to_string(i) +
                               " of " + to_string(lambda));

    std::vector<int> rows(lambda.vec());
    if (at(i) - at(i + 1) == 1) {
        bool deviation = odd_column_count(lambda) == 1 && lambda.length() >= 2 && at(0) == 2 && at(1) == 2 &&
                         at(2) <= 1;
        if (deviation) {
            // (2,2,1^(n-4)) -> (2,1^(n-2))
            return {Partition::hook(2, n - 2), AlgorithmStep::DeviationSingleSquare, i};
        }
        --rows[static_cast<std::size_t>(i - 1)];
        --rows[static_cast<std::size_t>(i)];
        rows.push_back(1);
        rows.push_back(1);
        std::ranges::sort(rows, std::greater<>{});
        return {detail::with_rows(std::move(rows)), AlgorithmStep::DominoToFirstColumn, i};
    }
    rows.resize(static_cast<std::size_t>(std::max(t + 1, i + 3)), 0);
    --rows[static_cast<std::size_t>(i - 1)];
    --rows[static_cast<std::size_t>(i)];
    ++rows[static_cast<std::size_t>(i + 1)];
    ++rows[static_cast<std::size_t>(i + 2)];
    return {detail::with_rows(std::move(rows)), AlgorithmStep::DominoShift, i};
}

/// Boundary situations where consecutive shapes' intervals do not overlap,
/// or where the start shape skips a value.
enum class TraceNote {
    ContiguousBoundary,  ///< (2,1^(n-2)) -> (1^n), one odd column: M(lambda) + 1 = m(nu), nothing skipped
    GapBelowMax,         ///< (2,2,1^(n-4)) -> (1^n), no odd columns: C(n,2)-1 skipped
    RectangleStart,      ///< start shape (k,k), no odd columns: m+1 skipped
};

inline std::string_view note_name(TraceNote note) {
    switch (note) {
        case TraceNote::ContiguousBoundary: return "contiguous_boundary";
        case TraceNote::GapBelowMax: return "gap_below_max";
        case TraceNote::RectangleStart: return "rectangle_start";
    }
    return "?";
}

inline TraceNote parse_note(std::string_view name) {
    for (auto n : {TraceNote::ContiguousBoundary, TraceNote::GapBelowMax, TraceNote::RectangleStart})
        if (note_name(n) == name) return n;
    throw parse_error("unknown trace note", std::string(name));
}

struct TraceEntry {
    int index = 0;
    Partition shape;
    MajBounds bounds;
    AlgorithmStep step_used = AlgorithmStep::Terminal_OddHook;
    std::vector<TraceNote> notes;

    bool has(TraceNote note) const { return std::ranges::find(notes, note) != notes.end(); }

    /// True when the passage from this shape to the next is allowed to
    /// break M(lambda) >= m(nu).
    bool inequality_exempt() const { return has(TraceNote::ContiguousBoundary) || has(TraceNote::GapBelowMax); }

    /// Values the notes say the class cannot reach around this entry.
    std::vector<std::int64_t> expected_missing() const {
        std::vector<std::int64_t> out;
        if (has(TraceNote::RectangleStart)) out.push_back(bounds.m + 1);
        if (has(TraceNote::GapBelowMax)) out.push_back(choose2(shape.size()) - 1);
        std::ranges::sort(out);
        return out;
    }

    friend bool operator==(TraceEntry const&, TraceEntry const&) = default;
};

/// Lazily walks the traversal for the class (n, r), one entry per call.
class TraceCursor {
public:
    TraceCursor(int n, int r) : r_(r) {
        auto cb = class_bounds(n, r);
        current_ = cb.min_shape;
    }

    std::optional<TraceEntry> next() {
        if (!current_) return std::nullopt;
        TraceEntry e;
        e.index = index_++;
        e.shape = *current_;
        e.bounds = shape_bounds(e.shape);
        int n = e.shape.size();
        if (e.index == 0 && r_ == 0 && is_proper_rectangle(e.shape)) e.notes.push_back(TraceNote::RectangleStart);

        if (is_terminal_shape(e.shape)) {
            e.step_used = AlgorithmStep::Terminal_OddHook;
            current_.reset();
            return e;
        }
        auto step = algorithm_step(e.shape);
        e.step_used = step.step;
        if (step.next == Partition::column(n)) {
            if (r_ == 1 && e.shape == Partition::hook(2, n - 2)) e.notes.push_back(TraceNote::ContiguousBoundary);
            if (r_ == 0 && n >= 4) {
                std::vector<int> two_two{2, 2};
                two_two.insert(two_two.end(), static_cast<std::size_t>(n - 4), 1);
                if (e.shape == Partition(two_two)) e.notes.push_back(TraceNote::GapBelowMax);
            }
        }
        current_ = std::move(step.next);
        return e;
    }

private:
    std::optional<Partition> current_;
    int index_ = 0;
    int r_;
};

inline std::vector<TraceEntry> algorithm_trace(int n, int r) {
    TraceCursor cursor(n, r);
    std::vector<TraceEntry> out;
    while (auto e = cursor.next()) out.push_back(std::move(*e));
    return out;
}

/// Union of the maj supports of the shapes on the trace. The traversal
/// certifies the class range when this equals predicted_values(n, r).
inline std::vector<std::int64_t> trace_certified_values(std::vector<TraceEntry> const& trace) {
    std::set<std::int64_t> seen;
    for (auto const& e : trace)
        for (auto v : shape_support(e.shape)) seen.insert(v);
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

enum class Method { Syt, Involutions };

inline std::string_view method_name(Method m) { return m == Method::Syt ? "syt" : "involutions"; }

inline Method parse_method(std::string_view s) {
    if (s == "syt" || s == "SYT") return Method::Syt;
    if (s == "involutions") return Method::Involutions;
    throw parse_error("unknown enumeration method", std::string(s));
}

/// Dense maj counts (index = maj) over the class with r fixed points,
/// gathered from SYT of every shape in D_n(r) or from the involutions
/// themselves. Empty for an empty class.
inline std::vector<std::uint64_t> class_maj_counts(int n, int r, Method method) {
    if (n < 0) throw std::invalid_argument("negative size");
    if (class_is_empty(n, r)) return {};
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(choose2(n) + 1), 0);
    if (method == Method::Syt) {
        for (auto const& shape : enumerate_shapes_with_odd_columns(n, r))
            for_each_row_word(shape, [&](std::span<int const>, std::int64_t m) { ++counts[static_cast<std::size_t>(m)]; });
    } else {
        for_each_involution_word(n, r, [&](std::span<int const> w) { ++counts[static_cast<std::size_t>(maj_of_word(w))]; });
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

struct VerificationReport {
    int n = 0;
    int k = 0;
    int r = 0;
    std::int64_t predicted_min = 0;
    std::int64_t predicted_max = 0;
    std::vector<std::int64_t> predicted_missing;
    std::vector<std::int64_t> observed_values;
    bool verdict = false;
    Method method = Method::Syt;
    bool empty_class = false;

    friend bool operator==(VerificationReport const&, VerificationReport const&) = default;
};

/// Exhausts the class and compares its maj value set against
/// [predicted_min, predicted_max] minus predicted_missing. An empty class
/// yields a report flagged empty_class with verdict false.
inline VerificationReport verify_theorem(int n, int r, Method method) {
    VerificationReport rep;
    rep.n = n;
    rep.r = r;
    rep.method = method;
    if (n < 1) throw std::invalid_argument("verification needs n >= 1");
    if (class_is_empty(n, r)) {
        rep.k = (n - r) / 2;
        rep.empty_class = true;
        return rep;
    }
    auto cb = class_bounds(n, r);
    rep.k = cb.k;
    rep.predicted_min = cb.bounds.m;
    rep.predicted_max = cb.bounds.big_m;
    rep.predicted_missing = missing_values(n, r);

    auto counts = class_maj_counts(n, r, method);
    for (std::size_t v = 0; v < counts.size(); ++v)
        if (counts[v]) rep.observed_values.push_back(static_cast<std::int64_t>(v));
    rep.verdict = rep.observed_values == predicted_values(n, r);
    return rep;
}

}  // namespace invmaj
