#pragma once

/**
 * @file qpoly.hpp
 * @brief Dense integer polynomials in q, q-integers and the q-hook-length
 *        formula for the maj generating function of SYT(lambda).
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "partition.hpp"

namespace invmaj {

/// Coefficient of q^k at index k. No trailing zeros; zero is the empty vector.
class QPolynomial {
public:
    QPolynomial() = default;

    explicit QPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

    QPolynomial(std::initializer_list<int> coefficients) {
        for (int v : coefficients) c_.emplace_back(v);
        trim();
    }

    static QPolynomial monomial(BigInt coefficient, std::size_t exponent) {
        std::vector<BigInt> c(exponent + 1);
        c[exponent] = std::move(coefficient);
        return QPolynomial(std::move(c));
    }

    std::vector<BigInt> const& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c_.size()) - 1; }

    /// Smallest exponent with a nonzero coefficient; -1 for zero.
    std::ptrdiff_t lowest_exponent() const noexcept {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0) return static_cast<std::ptrdiff_t>(k);
        return -1;
    }

    BigInt coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

    /// Multiply by q^k.
    QPolynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<BigInt> c(k, BigInt(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return QPolynomial(std::move(c));
    }

    QPolynomial& operator+=(QPolynomial const& o) { return combine(o, std::plus<>{}); }
    QPolynomial& operator-=(QPolynomial const& o) { return combine(o, std::minus<>{}); }

    friend QPolynomial operator+(QPolynomial a, QPolynomial const& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, QPolynomial const& b) { return a -= b; }

    friend QPolynomial operator*(QPolynomial const& a, QPolynomial const& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return QPolynomial(std::move(c));
    }

    QPolynomial& operator*=(QPolynomial const& o) { return *this = *this * o; }

    friend bool operator==(QPolynomial const&, QPolynomial const&) = default;

private:
    template <class Op>
    QPolynomial& combine(QPolynomial const& o, Op op) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = op(c_[k], o.c_[k]);
        trim();
        return *this;
    }

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Long division that must leave no remainder. Throws std::domain_error when
/// the divisor is zero or does not divide the dividend over the integers.
inline QPolynomial exact_divide(QPolynomial const& dividend, QPolynomial const& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (dividend.is_zero()) return {};
    if (dividend.degree() < divisor.degree()) throw std::domain_error("polynomial division leaves a remainder");

    auto rem = dividend.coefficients();
    auto const& d = divisor.coefficients();
    std::size_t dd = d.size() - 1;
    BigInt const& lead = d.back();
    std::vector<BigInt> quot(rem.size() - dd);

    for (std::size_t k = quot.size(); k-- > 0;) {
        BigInt const& top = rem[k + dd];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("polynomial division leaves a remainder");
        BigInt factor = top / lead;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= factor * d[j];
        quot[k] = std::move(factor);
    }
    if (std::ranges::any_of(rem, [](BigInt const& v) { return v != 0; }))
        throw std::domain_error("polynomial division leaves a remainder");
    return QPolynomial(std::move(quot));
}

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
inline QPolynomial q_int(int n) {
    if (n < 0) throw std::invalid_argument("q-integer of a negative number");
    return QPolynomial(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

inline QPolynomial q_factorial(int n) {
    QPolynomial f{1};
    for (int i = 2; i <= n; ++i) f *= q_int(i);
    return f;
}

inline BigInt evaluate_at_one(QPolynomial const& p) {
    BigInt s = 0;
    for (auto const& c : p.coefficients()) s += c;
    return s;
}

/// q^b(lambda) [n]_q! / prod_c [h_c]_q. Divides by the largest hooks first.
inline QPolynomial stanley_maj_poly(Partition const& lambda) {
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) hooks.push_back(hook_length(lambda, {i, j}));
    std::ranges::sort(hooks, std::greater<>{});

    auto p = q_factorial(lambda.size());
    for (int h : hooks)
        if (h > 1) p = exact_divide(p, q_int(h));
    return p.shifted(static_cast<std::size_t>(b_stat(lambda)));
}

/// `1 + 2q + 2q^2 + q^3`; the zero polynomial prints as `0`.
inline std::string to_string(QPolynomial const& p) {
    if (p.is_zero()) return "0";
    std::string s;
    auto const& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        bool negative = c[k] < 0;
        BigInt mag = negative ? BigInt(-c[k]) : c[k];
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (k == 0 || mag != 1) s += mag.str();
        if (k >= 1) s += 'q';
        if (k >= 2) s += '^' + std::to_string(k);
    }
    return s;
}

}  // namespace invmaj
