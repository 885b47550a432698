#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions viewed as Young diagrams.
 *
 * A Partition stores its parts weakly decreasing with no trailing zeros.
 * Rows are indexed from 0. Reading a row past the last stored part yields 0,
 * so algorithms that talk about "the row below the last one" can index
 * freely without padding the stored value.
 */

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invmaj {

/// Largest diagram size accepted anywhere in the library. Keeps every
/// statistic (b, maj, C(n,2)) well inside 32 bits.
inline constexpr int kMaxSize = 1 << 15;

/// Thrown when text input cannot be parsed; carries the offending token.
class parse_error : public std::invalid_argument {
public:
    parse_error(std::string const& what, std::string token)
        : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}

    std::string const& token() const noexcept { return token_; }

private:
    std::string token_;
};

inline std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(Cell const&, Cell const&) = default;
};

class Partition {
public:
    Partition() = default;

    /// Validates that parts are positive and weakly decreasing. Trailing
    /// zeros are dropped; any other zero or increase is rejected.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        std::int64_t total = 0;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            total += parts_[i];
            if (total > kMaxSize)
                throw std::out_of_range("partition size exceeds the supported maximum");
        }
        size_ = static_cast<int>(total);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition row(int n) { return n == 0 ? Partition{} : Partition({n}); }
    static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    /// (first_row, 1^below)
    static Partition hook(int first_row, int below) {
        std::vector<int> p{first_row};
        p.insert(p.end(), static_cast<std::size_t>(below), 1);
        return Partition(std::move(p));
    }

    static Partition rectangle(int rows, int cols) {
        return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
    }

    std::span<int const> parts() const noexcept { return parts_; }
    std::vector<int> const& vec() const noexcept { return parts_; }

    /// Row length; rows past the end are virtual zeros.
    int part(std::ptrdiff_t i) const noexcept {
        return i >= 0 && static_cast<std::size_t>(i) < parts_.size() ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    bool contains(Cell c) const noexcept { return c.row >= 0 && c.col >= 0 && c.col < part(c.row); }

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const& a, Partition const& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

inline Partition conjugate(Partition const& lambda) {
    std::vector<int> cols(static_cast<std::size_t>(lambda.part(0)), 0);
    for (int len : lambda.parts())
        for (int j = 0; j < len; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

/// Sum over rows of (row index) * (row length); the minimum maj over SYT(lambda).
inline std::int64_t b_stat(Partition const& lambda) {
    std::int64_t b = 0;
    for (int i = 0; i < lambda.length(); ++i) b += static_cast<std::int64_t>(i) * lambda.part(i);
    return b;
}

inline int odd_column_count(Partition const& lambda) {
    auto cols = conjugate(lambda);
    return static_cast<int>(std::ranges::count_if(cols.parts(), [](int c) { return c % 2 != 0; }));
}

inline int hook_length(Partition const& lambda, Cell c) {
    if (!lambda.contains(c))
        throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") lies outside the shape");
    int arm = lambda.part(c.row) - c.col - 1;
    int leg = 0;
    for (int r = c.row + 1; r < lambda.length() && lambda.part(r) > c.col; ++r) ++leg;
    return arm + leg + 1;
}

enum class HookKind { NotHook, OddHook, EvenHook };

inline bool is_hook(Partition const& lambda) { return lambda.part(1) <= 1; }

/// A hook (u, 1^(n-u)) is odd iff its first column, of length n-u+1, is odd.
inline HookKind hook_classification(Partition const& lambda) {
    if (lambda.empty()) throw std::invalid_argument("hook classification of the empty partition");
    if (!is_hook(lambda)) return HookKind::NotHook;
    int leg = lambda.length();
    return leg % 2 != 0 ? HookKind::OddHook : HookKind::EvenHook;
}

/// Rectangle with at least two rows and at least two columns.
inline bool is_proper_rectangle(Partition const& lambda) {
    if (lambda.length() < 2 || lambda.part(0) < 2) return false;
    return lambda.parts().back() == lambda.part(0);
}

/// Dominance order: every prefix sum of lambda is at most that of nu.
inline bool dominance_leq(Partition const& lambda, Partition const& nu) {
    if (lambda.size() != nu.size())
        throw std::invalid_argument("dominance comparison needs partitions of the same size");
    int len = std::max(lambda.length(), nu.length());
    std::int64_t a = 0, b = 0;
    for (int j = 0; j < len; ++j) {
        a += lambda.part(j);
        b += nu.part(j);
        if (a > b) return false;
    }
    return true;
}

/**
 * Input range over the partitions of n in reverse lexicographic order,
 * optionally restricted to shapes with a given number of odd columns.
 * Partitions are generated one at a time; nothing is materialized.
 */
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = Partition const*;
        using reference = Partition const&;

        iterator() = default;

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            advance();
            return *this;
        }
        void operator++(int) { advance(); }

        friend bool operator==(iterator const& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class PartitionRange;

        iterator(int n, int odd_columns) : odd_columns_(odd_columns) {
            if (n > 0) parts_.push_back(n);
            current_ = Partition(parts_);
            if (!accepts()) advance();
        }

        bool accepts() const { return odd_columns_ < 0 || odd_column_count(current_) == odd_columns_; }

        void advance() {
            do {
                if (!step()) {
                    done_ = true;
                    return;
                }
                current_ = Partition(parts_);
            } while (!accepts());
        }

        // Next partition in reverse lexicographic order; false after the last.
        bool step() {
            int ones = 0;
            while (!parts_.empty() && parts_.back() == 1) {
                parts_.pop_back();
                ++ones;
            }
            if (parts_.empty()) return false;
            int part = --parts_.back();
            int rest = ones + 1;
            while (rest > 0) {
                int take = std::min(part, rest);
                parts_.push_back(take);
                rest -= take;
            }
            return true;
        }

        std::vector<int> parts_;
        Partition current_;
        int odd_columns_ = -1;
        bool done_ = false;
    };

    explicit PartitionRange(int n, int odd_columns = -1) : n_(n), odd_columns_(odd_columns) {
        if (n < 0) throw std::invalid_argument("cannot enumerate partitions of a negative integer");
        if (n > kMaxSize) throw std::out_of_range("partition size exceeds the supported maximum");
    }

    iterator begin() const {
        if (odd_columns_ >= 0 && (odd_columns_ > n_ || (n_ - odd_columns_) % 2 != 0)) {
            iterator it;
            it.done_ = true;
            return it;
        }
        return iterator(n_, odd_columns_);
    }
    std::default_sentinel_t end() const noexcept { return {}; }

private:
    int n_;
    int odd_columns_;
};

inline PartitionRange enumerate_partitions(int n) { return PartitionRange(n); }

/// D_n(r): the shapes of size n with exactly r odd columns. Empty when the
/// parity of r does not match n.
inline PartitionRange enumerate_shapes_with_odd_columns(int n, int r) {
    if (r < 0) throw std::invalid_argument("odd column count must be non-negative");
    return PartitionRange(n, r);
}

inline std::string to_string(Partition const& lambda) {
    std::string s = "[";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(lambda.part(i));
    }
    return s + "]";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline int parse_int(std::string_view tok, std::string_view what) {
    tok = trim(tok);
    if (tok.empty() || tok.size() > 9 ||
        !std::ranges::all_of(tok, [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw parse_error("invalid " + std::string(what), std::string(tok));
    return std::stoi(std::string(tok));
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace detail

/// Parses `[4,3,1,1]`; exponent shorthand `[2^4,1]` repeats a part.
/// Brackets are optional. `[]` is the empty partition.
inline Partition parse_partition(std::string_view text) {
    auto body = detail::trim(text);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw parse_error("unterminated partition", std::string(text));
        body = detail::trim(body.substr(1, body.size() - 2));
    }
    std::vector<int> parts;
    if (!body.empty()) {
        for (auto tok : detail::split(body, ',')) {
            auto caret = tok.find('^');
            int value = detail::parse_int(tok.substr(0, caret), "partition part");
            int times = caret == std::string_view::npos ? 1 : detail::parse_int(tok.substr(caret + 1), "exponent");
            if (value == 0) throw parse_error("partition parts must be positive", std::string(detail::trim(tok)));
            if (static_cast<std::int64_t>(parts.size()) + times > kMaxSize)
                throw parse_error("partition too large", std::string(detail::trim(tok)));
            parts.insert(parts.end(), static_cast<std::size_t>(times), value);
        }
    }
    if (!std::ranges::is_sorted(parts, std::greater<>{}))
        throw parse_error("partition parts must be weakly decreasing", std::string(text));
    return Partition(std::move(parts));
}

}  // namespace invmaj
