#include <gtest/gtest.h>

#include <set>

#include "invmaj/majrange.hpp"
#include "oracles.hpp"

using namespace invmaj;

namespace {

Partition two_two_ones(int n) {
    std::vector<int> p{2, 2};
    p.insert(p.end(), static_cast<std::size_t>(n - 4), 1);
    return Partition(p);
}

}  // namespace

TEST(ShapeBounds, Examples) {
    EXPECT_EQ(shape_bounds(Partition({5, 4})), (MajBounds{4, 20}));
    EXPECT_EQ(shape_bounds(Partition({4, 3, 1, 1})), (MajBounds{8, 27}));
    EXPECT_EQ(shape_bounds(Partition::column(9)), (MajBounds{36, 36}));
}

TEST(ShapeBounds, MatchEnumeratedSupport) {
    for (int n = 1; n <= 12; ++n)
        for (auto const& p : enumerate_partitions(n)) {
            auto hist = maj_histogram(p);
            auto b = shape_bounds(p);
            ASSERT_EQ(b.m, hist.begin()->first);
            ASSERT_EQ(b.big_m, hist.rbegin()->first);
            std::vector<std::int64_t> support;
            for (auto const& [k, v] : hist) support.push_back(k);
            ASSERT_EQ(shape_support(p), support) << to_string(p);
        }
}

TEST(ShapeGap, Examples) {
    auto b221 = shape_bounds(Partition({2, 2, 1}));
    EXPECT_EQ(b221.big_m - b221.m, 4);
    EXPECT_TRUE(shape_gap_ok(Partition({2, 2, 1})));

    auto b33 = shape_bounds(Partition({3, 3}));
    EXPECT_EQ(b33.big_m - b33.m, 6);
    EXPECT_TRUE(shape_gap_ok(Partition({3, 3})));
    EXPECT_TRUE(shape_gap_ok(Partition({4, 3, 1, 1})));

    EXPECT_FALSE(shape_gap_ok(Partition({2, 1})));
    EXPECT_THROW(shape_gap_ok(Partition({7})), std::invalid_argument);
    EXPECT_THROW(shape_gap_ok(Partition::column(7)), std::invalid_argument);
}

TEST(ShapeGap, HoldsForAllShapesFromSixToFourteen) {
    for (int n = 6; n <= 14; ++n)
        for (auto const& p : enumerate_partitions(n)) {
            if (p.length() == 1 || p.part(0) == 1) continue;
            ASSERT_TRUE(shape_gap_ok(p)) << to_string(p);
        }
}

TEST(ClassBounds, Examples) {
    auto c91 = class_bounds(9, 1);
    EXPECT_EQ(c91.k, 4);
    EXPECT_EQ(c91.bounds, (MajBounds{4, 36}));
    EXPECT_EQ(c91.min_shape, Partition({5, 4}));
    EXPECT_EQ(c91.max_shape, Partition::column(9));

    auto c40 = class_bounds(4, 0);
    EXPECT_EQ(c40.bounds, (MajBounds{2, 6}));
    EXPECT_EQ(c40.min_shape, Partition({2, 2}));
    EXPECT_EQ(c40.max_shape, Partition::column(4));

    auto c55 = class_bounds(5, 5);
    EXPECT_EQ(c55.bounds, (MajBounds{0, 0}));
    EXPECT_EQ(c55.min_shape, Partition({5}));
    EXPECT_EQ(c55.max_shape, Partition({5}));

    EXPECT_EQ(class_bounds(8, 2).max_shape, Partition({2, 1, 1, 1, 1, 1, 1}));

    EXPECT_THROW(class_bounds(3, 0), empty_class_error);
    EXPECT_THROW(class_bounds(3, 5), empty_class_error);
    EXPECT_THROW(class_bounds(0, 0), std::invalid_argument);
}

TEST(ClassBounds, AgreeWithScanOverOddColumnShapes) {
    for (int n = 1; n <= 14; ++n)
        for (int r = n % 2; r <= n; r += 2) {
            std::int64_t lo = INT64_MAX, hi = INT64_MIN;
            for (auto const& p : enumerate_shapes_with_odd_columns(n, r)) {
                auto b = shape_bounds(p);
                lo = std::min(lo, b.m);
                hi = std::max(hi, b.big_m);
            }
            auto cb = class_bounds(n, r);
            ASSERT_EQ(cb.bounds, (MajBounds{lo, hi})) << "n=" << n << " r=" << r;
            ASSERT_EQ(shape_bounds(cb.min_shape).m, lo);
            ASSERT_EQ(shape_bounds(cb.max_shape).big_m, hi);
            ASSERT_EQ(odd_column_count(cb.min_shape), r);
            ASSERT_EQ(odd_column_count(cb.max_shape), r);
        }
}

TEST(MissingValues, Examples) {
    EXPECT_EQ(missing_values(4, 0), (std::vector<std::int64_t>{3, 5}));
    EXPECT_TRUE(missing_values(9, 1).empty());
    EXPECT_TRUE(missing_values(2, 0).empty());
    EXPECT_EQ(missing_values(10, 0), (std::vector<std::int64_t>{6, 44}));
    EXPECT_THROW(missing_values(5, 0), empty_class_error);
}

TEST(AlgorithmStep, Examples) {
    auto s1 = algorithm_step(Partition({4, 3, 1, 1}));
    EXPECT_EQ(s1.next, Partition({3, 3, 2, 1}));
    EXPECT_EQ(s1.step, AlgorithmStep::SingleSquare);
    EXPECT_EQ(s1.pivot, 0);

    auto s2 = algorithm_step(Partition({3, 2, 1}));
    EXPECT_EQ(s2.next, Partition({3, 1, 1, 1}));
    EXPECT_EQ(s2.step, AlgorithmStep::SingleSquare);
    EXPECT_EQ(s2.pivot, 1);

    for (int n : {7, 9, 11, 13}) {
        auto s = algorithm_step(two_two_ones(n));
        EXPECT_EQ(s.next, Partition::hook(2, n - 2));
        EXPECT_EQ(s.step, AlgorithmStep::DeviationSingleSquare);
    }

    auto even_hook = algorithm_step(Partition({2, 1, 1, 1}));
    EXPECT_EQ(even_hook.next, Partition::column(5));
    EXPECT_EQ(even_hook.step, AlgorithmStep::EvenHookToOdd);

    auto shift = algorithm_step(Partition({3, 3, 1, 1, 1}));
    EXPECT_EQ(shift.next, Partition({2, 2, 2, 2, 1}));
    EXPECT_EQ(shift.step, AlgorithmStep::DominoShift);

    auto to_col = algorithm_step(Partition({2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(to_col.next, Partition::hook(2, 7));
    EXPECT_EQ(to_col.step, AlgorithmStep::DominoToFirstColumn);

    // fixed-point-free class keeps the plain domino move
    EXPECT_EQ(algorithm_step(two_two_ones(8)).next, Partition::column(8));
    EXPECT_EQ(algorithm_step(two_two_ones(8)).step, AlgorithmStep::DominoToFirstColumn);
}

TEST(AlgorithmStep, TerminalShapesRejected) {
    EXPECT_THROW(algorithm_step(Partition::column(9)), std::invalid_argument);
    EXPECT_THROW(algorithm_step(Partition::column(8)), std::invalid_argument);
    EXPECT_THROW(algorithm_step(Partition({3, 1, 1})), std::invalid_argument);
    EXPECT_THROW(algorithm_step(Partition({5})), std::invalid_argument);
    EXPECT_THROW(algorithm_step(Partition{}), std::invalid_argument);
}

TEST(AlgorithmStep, EveryShapeStepsWithinItsClass) {
    for (int n = 1; n <= 14; ++n)
        for (auto const& p : enumerate_partitions(n)) {
            if (is_terminal_shape(p)) continue;
            StepResult s{Partition{}, AlgorithmStep::Terminal_OddHook, -1};
            ASSERT_NO_THROW(s = algorithm_step(p)) << to_string(p);
            ASSERT_EQ(s.next.size(), n);
            ASSERT_EQ(odd_column_count(s.next), odd_column_count(p)) << to_string(p);
            ASSERT_TRUE(dominance_leq(s.next, p) && s.next != p) << to_string(p);

            auto db = b_stat(s.next) - b_stat(p);
            auto dbc = b_stat(conjugate(p)) - b_stat(conjugate(s.next));
            switch (s.step) {
                case AlgorithmStep::SingleSquare: ASSERT_EQ(db, 2) << to_string(p); break;
                case AlgorithmStep::DominoShift: ASSERT_EQ(db, 4) << to_string(p); break;
                case AlgorithmStep::DominoToFirstColumn: ASSERT_EQ(dbc, 2) << to_string(p); break;
                default: break;
            }
        }
}

TEST(Trace, GoldenNineOne) {
    auto trace = algorithm_trace(9, 1);
    std::vector<Partition> shapes{{5, 4},          {4, 4, 1},          {4, 3, 1, 1},
                                  {3, 3, 2, 1},    {3, 3, 1, 1, 1},    {2, 2, 2, 2, 1},
                                  {2, 2, 2, 1, 1, 1}, Partition::hook(2, 7), Partition::column(9)};
    std::vector<MajBounds> bounds{{4, 20},  {6, 24},  {8, 27},  {10, 29}, {12, 30},
                                  {16, 32}, {18, 33}, {28, 35}, {36, 36}};
    using S = AlgorithmStep;
    std::vector<S> steps{S::SingleSquare, S::SingleSquare, S::SingleSquare,
                         S::SingleSquare, S::DominoShift,  S::SingleSquare,
                         S::DominoToFirstColumn, S::EvenHookToOdd, S::Terminal_OddHook};
    ASSERT_EQ(trace.size(), 9u);
    for (std::size_t i = 0; i < trace.size(); ++i) {
        EXPECT_EQ(trace[i].index, static_cast<int>(i));
        EXPECT_EQ(trace[i].shape, shapes[i]) << i;
        EXPECT_EQ(trace[i].bounds, bounds[i]) << i;
        EXPECT_EQ(trace[i].step_used, steps[i]) << i;
    }
    EXPECT_TRUE(trace[7].has(TraceNote::ContiguousBoundary));
}

TEST(Trace, SmallAndBoundaryClasses) {
    auto t20 = algorithm_trace(2, 0);
    ASSERT_EQ(t20.size(), 1u);
    EXPECT_EQ(t20[0].shape, Partition({1, 1}));
    EXPECT_EQ(t20[0].bounds, (MajBounds{1, 1}));

    auto t71 = algorithm_trace(7, 1);
    ASSERT_GE(t71.size(), 3u);
    auto n = t71.size();
    EXPECT_EQ(t71[n - 3].shape, Partition({2, 2, 1, 1, 1}));
    EXPECT_EQ(t71[n - 3].step_used, AlgorithmStep::DeviationSingleSquare);
    EXPECT_EQ(t71[n - 2].shape, Partition::hook(2, 5));
    EXPECT_EQ(t71[n - 2].step_used, AlgorithmStep::EvenHookToOdd);
    EXPECT_EQ(t71[n - 1].shape, Partition::column(7));

    auto t55 = algorithm_trace(5, 5);
    ASSERT_EQ(t55.size(), 1u);
    EXPECT_EQ(t55[0].step_used, AlgorithmStep::Terminal_OddHook);

    auto t80 = algorithm_trace(8, 0);
    EXPECT_EQ(t80.front().shape, Partition({4, 4}));
    EXPECT_TRUE(t80.front().has(TraceNote::RectangleStart));
    EXPECT_EQ(t80.front().expected_missing(), (std::vector<std::int64_t>{5}));
    auto gap = std::ranges::find_if(t80, [](auto const& e) { return e.has(TraceNote::GapBelowMax); });
    ASSERT_NE(gap, t80.end());
    EXPECT_EQ(gap->shape, two_two_ones(8));
    EXPECT_EQ(gap->expected_missing(), (std::vector<std::int64_t>{27}));

    auto t40 = algorithm_trace(4, 0);
    ASSERT_EQ(t40.size(), 2u);
    EXPECT_TRUE(t40[0].has(TraceNote::RectangleStart));
    EXPECT_TRUE(t40[0].has(TraceNote::GapBelowMax));
    EXPECT_EQ(t40[0].expected_missing(), (std::vector<std::int64_t>{3, 5}));

    EXPECT_THROW(algorithm_trace(6, 1), empty_class_error);
}

TEST(Trace, CursorIsLazyAndMatchesVector) {
    TraceCursor cursor(12, 2);
    auto full = algorithm_trace(12, 2);
    for (auto const& e : full) {
        auto got = cursor.next();
        ASSERT_TRUE(got);
        EXPECT_EQ(*got, e);
    }
    EXPECT_FALSE(cursor.next());
    EXPECT_FALSE(cursor.next());
}

TEST(Trace, StructuralProperties) {
    for (int n = 1; n <= 14; ++n)
        for (int r = n % 2; r <= n; r += 2) {
            auto trace = algorithm_trace(n, r);
            auto cb = class_bounds(n, r);
            ASSERT_EQ(trace.front().shape, cb.min_shape);
            ASSERT_EQ(trace.back().shape, cb.max_shape);
            ASSERT_EQ(trace.back().step_used, AlgorithmStep::Terminal_OddHook);
            for (std::size_t i = 0; i < trace.size(); ++i) {
                auto const& e = trace[i];
                ASSERT_EQ(odd_column_count(e.shape), r);
                ASSERT_EQ(e.bounds, shape_bounds(e.shape));
                if (i + 1 == trace.size()) break;
                auto const& next = trace[i + 1];
                ASSERT_TRUE(dominance_leq(next.shape, e.shape) && next.shape != e.shape);
                if (!e.inequality_exempt()) {
                    ASSERT_GE(e.bounds.big_m, next.bounds.m)
                        << "n=" << n << " r=" << r << " at " << to_string(e.shape);
                }
                if (e.has(TraceNote::ContiguousBoundary)) {
                    ASSERT_EQ(e.bounds.big_m + 1, next.bounds.m);
                }
                if (e.has(TraceNote::GapBelowMax)) {
                    ASSERT_EQ(e.bounds.big_m + 2, next.bounds.m);
                }
            }
        }
}

TEST(Trace, ChainCoversPredictedRange) {
    for (int n = 1; n <= 14; ++n)
        for (int r = n % 2; r <= n; r += 2) {
            auto trace = algorithm_trace(n, r);
            ASSERT_EQ(trace_certified_values(trace), predicted_values(n, r)) << "n=" << n << " r=" << r;
            std::set<std::int64_t> expected_gaps;
            for (auto const& e : trace)
                for (auto v : e.expected_missing()) expected_gaps.insert(v);
            auto missing = missing_values(n, r);
            auto cb = class_bounds(n, r);
            for (auto v : expected_gaps) {
                if (v > cb.bounds.m && v < cb.bounds.big_m) {
                    ASSERT_TRUE(std::ranges::binary_search(missing, v));
                }
            }
        }
}

TEST(Verify, Examples) {
    for (auto method : {Method::Syt, Method::Involutions}) {
        auto r40 = verify_theorem(4, 0, method);
        EXPECT_EQ(r40.observed_values, (std::vector<std::int64_t>{2, 4, 6}));
        EXPECT_EQ(r40.predicted_min, 2);
        EXPECT_EQ(r40.predicted_max, 6);
        EXPECT_EQ(r40.predicted_missing, (std::vector<std::int64_t>{3, 5}));
        EXPECT_TRUE(r40.verdict);

        auto r91 = verify_theorem(9, 1, method);
        EXPECT_EQ(r91.observed_values.size(), 33u);
        EXPECT_EQ(r91.observed_values.front(), 4);
        EXPECT_EQ(r91.observed_values.back(), 36);
        EXPECT_TRUE(r91.verdict);

        auto r55 = verify_theorem(5, 5, method);
        EXPECT_EQ(r55.observed_values, (std::vector<std::int64_t>{0}));
        EXPECT_TRUE(r55.verdict);
    }
}

TEST(Verify, EmptyClassIsFlagged) {
    auto rep = verify_theorem(5, 2, Method::Syt);
    EXPECT_TRUE(rep.empty_class);
    EXPECT_FALSE(rep.verdict);
    EXPECT_TRUE(rep.observed_values.empty());
    EXPECT_TRUE(class_maj_counts(5, 2, Method::Involutions).empty());
}

TEST(Verify, BruteForceClassAgreesForSmallN) {
    for (int n = 1; n <= 8; ++n)
        for (int r = n % 2; r <= n; r += 2) {
            std::set<std::int64_t> brute;
            for (auto const& w : oracle::brute_involutions(n, r)) brute.insert(oracle::perm_maj(w));
            auto rep = verify_theorem(n, r, Method::Involutions);
            ASSERT_EQ(rep.observed_values, std::vector<std::int64_t>(brute.begin(), brute.end()));
            ASSERT_TRUE(rep.verdict) << "n=" << n << " r=" << r;
        }
}
