#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations in one-line notation, involution classes and RSK.
 */

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"
#include "tableau.hpp"

namespace invmaj {

/// One-line notation with 1-based values: word()[i-1] = pi(i).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        if (word_.size() > static_cast<std::size_t>(kMaxSize))
            throw std::out_of_range("permutation size exceeds the supported maximum");
        std::vector<char> seen(word_.size(), 0);
        for (int v : word_) {
            if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)])
                throw std::invalid_argument("not a permutation of 1.." + std::to_string(size()));
            seen[static_cast<std::size_t>(v - 1)] = 1;
        }
    }

    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(w));
    }

    int size() const noexcept { return static_cast<int>(word_.size()); }
    std::vector<int> const& word() const noexcept { return word_; }

    /// pi(i) for 1 <= i <= n.
    int operator()(int i) const { return word_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

private:
    std::vector<int> word_;
};

inline std::vector<int> descent_set(Permutation const& pi) {
    std::vector<int> des;
    for (int i = 1; i < pi.size(); ++i)
        if (pi(i) > pi(i + 1)) des.push_back(i);
    return des;
}

inline std::int64_t maj_of_word(std::span<int const> word) {
    std::int64_t m = 0;
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] > word[i]) m += static_cast<std::int64_t>(i);
    return m;
}

inline std::int64_t maj(Permutation const& pi) { return maj_of_word(pi.word()); }

inline Permutation inverse(Permutation const& pi) {
    std::vector<int> w(pi.word().size());
    for (int i = 1; i <= pi.size(); ++i) w[static_cast<std::size_t>(pi(i) - 1)] = i;
    return Permutation(std::move(w));
}

/// (a * b)(i) = a(b(i))
inline Permutation compose(Permutation const& a, Permutation const& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different sizes");
    std::vector<int> w(a.word().size());
    for (int i = 1; i <= a.size(); ++i) w[static_cast<std::size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(w));
}

inline bool is_involution(Permutation const& pi) {
    for (int i = 1; i <= pi.size(); ++i)
        if (pi(pi(i)) != i) return false;
    return true;
}

inline int fixed_point_count(Permutation const& pi) {
    int c = 0;
    for (int i = 1; i <= pi.size(); ++i)
        if (pi(i) == i) ++c;
    return c;
}

struct TableauPair {
    StandardTableau p;
    StandardTableau q;

    TableauPair(StandardTableau p_, StandardTableau q_) : p(std::move(p_)), q(std::move(q_)) {
        if (p.shape() != q.shape()) throw std::invalid_argument("insertion and recording tableaux differ in shape");
    }

    Partition const& shape() const noexcept { return p.shape(); }

    friend bool operator==(TableauPair const&, TableauPair const&) = default;
};

/// Row insertion. P collects the bumped values, Q records where each step
/// ended.
inline TableauPair rsk(Permutation const& pi) {
    std::vector<std::vector<int>> p, q;
    for (int t = 1; t <= pi.size(); ++t) {
        int x = pi(t);
        for (std::size_t row = 0;; ++row) {
            if (row == p.size()) {
                p.push_back({x});
                q.push_back({t});
                break;
            }
            auto it = std::ranges::upper_bound(p[row], x);
            if (it == p[row].end()) {
                p[row].push_back(x);
                q[row].push_back(t);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

/// Reverse row insertion: peel n, n-1, ... off Q and bump the matching
/// corner of P back up to the first row.
inline Permutation rsk_inverse(TableauPair const& pair) {
    auto p = pair.p.rows();
    auto q = pair.q.rows();
    int n = pair.p.size();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int t = n; t >= 1; --t) {
        auto row = static_cast<std::size_t>(pair.q.row_of(t));
        if (q[row].back() != t) throw std::logic_error("recording tableau is not standard");
        q[row].pop_back();
        int x = p[row].back();
        p[row].pop_back();
        if (p[row].empty()) {
            p.pop_back();
            q.pop_back();
        }
        while (row-- > 0) {
            auto it = std::ranges::lower_bound(p[row], x);
            if (it == p[row].begin()) throw std::logic_error("insertion tableau is not standard");
            --it;
            std::swap(x, *it);
        }
        word[static_cast<std::size_t>(t - 1)] = x;
    }
    return Permutation(std::move(word));
}

/// |C_(2^k,1^r)| = n! / (k! 2^k r!)
inline BigInt involution_class_size(int n, int r) {
    if (r < 0 || r > n || (n - r) % 2 != 0) return 0;
    int k = (n - r) / 2;
    BigInt denom = factorial(k) * factorial(r);
    denom <<= k;
    return factorial(n) / denom;
}

namespace detail {

template <class F>
class MatchingWalker {
public:
    MatchingWalker(int n, int fixed, F& fn)
        : word_(static_cast<std::size_t>(n), 0), fixed_left_(fixed), pairs_left_((n - fixed) / 2), fn_(fn) {}

    void run() { next(0); }

private:
    void next(std::size_t from) {
        while (from < word_.size() && word_[from] != 0) ++from;
        if (from == word_.size()) {
            fn_(std::span<int const>(word_));
            return;
        }
        int self = static_cast<int>(from) + 1;
        if (fixed_left_ > 0) {
            --fixed_left_;
            word_[from] = self;
            next(from + 1);
            word_[from] = 0;
            ++fixed_left_;
        }
        if (pairs_left_ > 0) {
            --pairs_left_;
            for (std::size_t j = from + 1; j < word_.size(); ++j) {
                if (word_[j] != 0) continue;
                word_[from] = static_cast<int>(j) + 1;
                word_[j] = self;
                next(from + 1);
                word_[j] = 0;
            }
            word_[from] = 0;
            ++pairs_left_;
        }
    }

    std::vector<int> word_;
    int fixed_left_;
    int pairs_left_;
    F& fn_;
};

}  // namespace detail

/// Streams the one-line words of the involutions of S_n with exactly r fixed
/// points, built as matchings (never by filtering S_n). A parity mismatch
/// gives an empty stream.
template <class F>
void for_each_involution_word(int n, int r, F&& fn) {
    if (n < 0) throw std::invalid_argument("negative permutation size");
    if (r < 0 || r > n || (n - r) % 2 != 0) return;
    detail::MatchingWalker<std::remove_reference_t<F>> walker(n, r, fn);
    walker.run();
}

/// All involutions of S_n, or only the class with `fixed_points` fixed points.
template <class F>
void for_each_involution(int n, std::optional<int> fixed_points, F&& fn) {
    auto emit = [&](std::span<int const> w) { fn(Permutation(std::vector<int>(w.begin(), w.end()))); };
    if (fixed_points) {
        for_each_involution_word(n, *fixed_points, emit);
        return;
    }
    for (int r = n; r >= 0; r -= 2) for_each_involution_word(n, r, emit);
}

inline std::vector<Permutation> enumerate_involutions(int n, std::optional<int> fixed_points = std::nullopt) {
    std::vector<Permutation> out;
    for_each_involution(n, fixed_points, [&](Permutation const& p) { out.push_back(p); });
    return out;
}

/// Comma-separated one-line word, e.g. `5,3,2,1,4,7,6`.
inline std::string to_string(Permutation const& pi) {
    std::string s;
    for (int i = 1; i <= pi.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(pi(i));
    }
    return s;
}

/// Accepts `5,3,2,1,4,7,6`, `5 3 2 1`, bare digits `5321476` (n <= 9) and
/// cycle form `(1 2)(3 4)`, whose size is its largest entry.
inline Permutation parse_permutation(std::string_view text) {
    auto body = detail::trim(text);
    auto wrap = [&](std::vector<int> w) {
        try {
            return Permutation(std::move(w));
        } catch (std::exception const& e) {
            throw parse_error(e.what(), std::string(body));
        }
    };

    if (!body.empty() && body.front() == '(') {
        std::vector<std::vector<int>> cycles;
        int n = 0;
        std::size_t pos = 0;
        while (pos < body.size()) {
            if (std::isspace(static_cast<unsigned char>(body[pos]))) {
                ++pos;
                continue;
            }
            if (body[pos] != '(') throw parse_error("expected '(' in cycle notation", std::string(body.substr(pos)));
            auto close = body.find(')', pos);
            if (close == std::string_view::npos) throw parse_error("unterminated cycle", std::string(body.substr(pos)));
            auto inner = body.substr(pos + 1, close - pos - 1);
            auto& cyc = cycles.emplace_back();
            std::string tok;
            for (std::size_t i = 0; i <= inner.size(); ++i) {
                char ch = i < inner.size() ? inner[i] : ' ';
                if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
                    if (!tok.empty()) {
                        int v = detail::parse_int(tok, "cycle entry");
                        if (v == 0) throw parse_error("cycle entries start at 1", tok);
                        cyc.push_back(v);
                        n = std::max(n, v);
                        tok.clear();
                    }
                } else {
                    tok += ch;
                }
            }
            pos = close + 1;
        }
        if (n > kMaxSize) throw parse_error("permutation too large", std::string(body));
        std::vector<int> w(static_cast<std::size_t>(n), 0);
        for (auto const& cyc : cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                auto& slot = w[static_cast<std::size_t>(cyc[i] - 1)];
                if (slot != 0) throw parse_error("entry repeated across cycles", std::to_string(cyc[i]));
                slot = cyc[(i + 1) % cyc.size()];
            }
        }
        for (int i = 0; i < n; ++i)
            if (w[static_cast<std::size_t>(i)] == 0) w[static_cast<std::size_t>(i)] = i + 1;
        return wrap(std::move(w));
    }

    std::vector<int> w;
    if (body.empty()) return {};
    if (body.find(',') != std::string_view::npos) {
        for (auto tok : detail::split(body, ',')) w.push_back(detail::parse_int(tok, "permutation entry"));
    } else if (body.find_first_of(" \t") != std::string_view::npos) {
        std::string tok;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            char ch = i < body.size() ? body[i] : ' ';
            if (std::isspace(static_cast<unsigned char>(ch))) {
                if (!tok.empty()) w.push_back(detail::parse_int(tok, "permutation entry"));
                tok.clear();
            } else {
                tok += ch;
            }
        }
    } else {
        for (char ch : body) w.push_back(detail::parse_int(std::string_view(&ch, 1), "permutation entry"));
    }
    return wrap(std::move(w));
}

}  // namespace invmaj
