#pragma once

/**
 * @file tableau.hpp
 * @brief Standard Young tableaux, their descents and major index.
 *
 * Enumeration works on the row word of a tableau: word[v-1] is the row that
 * holds v. A row word determines the tableau, and the descent test "v+1 sits
 * in a lower row than v" reads straight off it, so the hot loops never build
 * the filled diagram.
 */

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace invmaj {

class StandardTableau {
public:
    /// Validates shape, entry set {1..n} and strict row/column increase.
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        lengths.reserve(rows_.size());
        for (auto const& r : rows_) lengths.push_back(static_cast<int>(r.size()));
        if (!lengths.empty() && lengths.back() == 0)
            throw std::invalid_argument("tableau rows must be non-empty");
        shape_ = Partition(lengths);

        int n = shape_.size();
        row_of_.assign(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                int v = rows_[i][j];
                if (v < 1 || v > n || row_of_[static_cast<std::size_t>(v - 1)] != -1)
                    throw std::invalid_argument("tableau entries must be exactly 1.." + std::to_string(n));
                row_of_[static_cast<std::size_t>(v - 1)] = static_cast<int>(i);
                if (j > 0 && rows_[i][j - 1] >= v)
                    throw std::invalid_argument("tableau rows must increase left to right");
                if (i > 0 && rows_[i - 1][j] >= v)
                    throw std::invalid_argument("tableau columns must increase top to bottom");
            }
        }
    }

    /// Builds the tableau with the given row word. Checks only that the word
    /// fits the shape row by row; a word that is not a lattice word fails
    /// the column check.
    static StandardTableau from_row_word(Partition const& shape, std::span<int const> row_of) {
        std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.length()));
        for (std::size_t v = 0; v < row_of.size(); ++v) {
            auto r = row_of[v];
            if (r < 0 || r >= shape.length()) throw std::invalid_argument("row word does not fit the shape");
            rows[static_cast<std::size_t>(r)].push_back(static_cast<int>(v) + 1);
        }
        StandardTableau t(std::move(rows));
        if (t.shape() != shape) throw std::invalid_argument("row word does not fit the shape");
        return t;
    }

    Partition const& shape() const noexcept { return shape_; }
    std::vector<std::vector<int>> const& rows() const noexcept { return rows_; }
    int size() const noexcept { return shape_.size(); }

    /// 0-based row holding value v (1 <= v <= n).
    int row_of(int v) const { return row_of_.at(static_cast<std::size_t>(v - 1)); }
    std::span<int const> row_word() const noexcept { return row_of_; }

    friend bool operator==(StandardTableau const& a, StandardTableau const& b) { return a.rows_ == b.rows_; }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_of_;
};

/// Descents of a row word: positions i in 1..n-1 whose successor is lower.
inline std::vector<int> descent_set_of_row_word(std::span<int const> row_of) {
    std::vector<int> des;
    for (std::size_t i = 1; i < row_of.size(); ++i)
        if (row_of[i] > row_of[i - 1]) des.push_back(static_cast<int>(i));
    return des;
}

inline std::vector<int> descent_set(StandardTableau const& t) { return descent_set_of_row_word(t.row_word()); }

inline std::int64_t maj(StandardTableau const& t) {
    std::int64_t m = 0;
    for (int d : descent_set(t)) m += d;
    return m;
}

namespace detail {

// Removes n, n-1, ..., 1 from outer corners in turn. Rows are tried top to
// bottom, which fixes the order of the stream.
template <class F>
class RowWordWalker {
public:
    RowWordWalker(Partition const& shape, F& fn)
        : len_(shape.vec()), word_(static_cast<std::size_t>(shape.size()), 0), fn_(fn), n_(shape.size()) {
        len_.push_back(0);
    }

    void run() { place(n_, 0); }

private:
    void place(int v, std::int64_t maj) {
        if (v == 0) {
            fn_(std::span<int const>(word_), maj);
            return;
        }
        for (std::size_t i = 0; i + 1 < len_.size(); ++i) {
            if (len_[i] <= len_[i + 1]) continue;
            word_[static_cast<std::size_t>(v - 1)] = static_cast<int>(i);
            bool descent = v < n_ && word_[static_cast<std::size_t>(v)] > static_cast<int>(i);
            --len_[i];
            place(v - 1, descent ? maj + v : maj);
            ++len_[i];
        }
    }

    std::vector<int> len_;
    std::vector<int> word_;
    F& fn_;
    int n_;
};

}  // namespace detail

/// Calls fn(row_word, maj) once per SYT of the shape, streaming.
template <class F>
void for_each_row_word(Partition const& shape, F&& fn) {
    detail::RowWordWalker<std::remove_reference_t<F>> walker(shape, fn);
    walker.run();
}

/// Calls fn(tableau) once per SYT of the shape. Build with
/// INVMAJ_CHECKED_ENUMERATION to cross-check each row word's maj against the
/// validated tableau.
template <class F>
void for_each_syt(Partition const& shape, F&& fn) {
    for_each_row_word(shape, [&](std::span<int const> word, [[maybe_unused]] std::int64_t m) {
        auto t = StandardTableau::from_row_word(shape, word);
#ifdef INVMAJ_CHECKED_ENUMERATION
        if (maj(t) != m) throw std::logic_error("incremental maj disagrees with tableau maj");
#endif
        fn(t);
    });
}

inline std::vector<StandardTableau> enumerate_syt(Partition const& shape) {
    std::vector<StandardTableau> out;
    for_each_syt(shape, [&](StandardTableau const& t) { out.push_back(t); });
    return out;
}

/// Hook-length formula n! / prod h_c.
inline BigInt count_syt(Partition const& shape) {
    BigInt denom = 1;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.part(i); ++j) denom *= hook_length(shape, {i, j});
    return factorial(shape.size()) / denom;
}

/// Dense maj counts by enumeration, index = maj, length C(n,2)+1.
inline std::vector<std::uint64_t> maj_counts(Partition const& shape) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(choose2(shape.size()) + 1), 0);
    for_each_row_word(shape, [&](std::span<int const>, std::int64_t m) { ++counts[static_cast<std::size_t>(m)]; });
    return counts;
}

/// maj value -> number of SYT of the shape with that maj (the fake degrees).
inline std::map<std::int64_t, BigInt> maj_histogram(Partition const& shape) {
    std::map<std::int64_t, BigInt> hist;
    auto counts = maj_counts(shape);
    for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k]) hist.emplace(static_cast<std::int64_t>(k), BigInt(counts[k]));
    return hist;
}

/// `1,4,5,6/2,7,9/3/8`
inline std::string to_string(StandardTableau const& t) {
    std::string s;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < t.rows()[i].size(); ++j) {
            if (j) s += ',';
            s += std::to_string(t.rows()[i][j]);
        }
    }
    return s;
}

inline StandardTableau parse_tableau(std::string_view text) {
    auto body = detail::trim(text);
    std::vector<std::vector<int>> rows;
    if (!body.empty()) {
        for (auto row : detail::split(body, '/')) {
            auto& out = rows.emplace_back();
            for (auto tok : detail::split(row, ',')) out.push_back(detail::parse_int(tok, "tableau entry"));
        }
    }
    try {
        return StandardTableau(std::move(rows));
    } catch (std::invalid_argument const& e) {
        throw parse_error(e.what(), std::string(text));
    }
}

}  // namespace invmaj
