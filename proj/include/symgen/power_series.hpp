#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symgen/error.hpp"
#include "symgen/laurent.hpp"
#include "symgen/rational.hpp"

namespace symgen {

template <class C>
concept coefficient_ring = std::regular<C> && requires(const C &a, const C &b, const Rational &q) {
    { a + b } -> std::convertible_to<C>;
    { a - b } -> std::convertible_to<C>;
    { a * b } -> std::convertible_to<C>;
    { -a } -> std::convertible_to<C>;
    { a * q } -> std::convertible_to<C>;
    { zero_like(a) } -> std::convertible_to<C>;
    { one_like(a) } -> std::convertible_to<C>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

inline std::optional<Rational> ring_inverse(const Rational &r)
{
    if (is_zero(r)) {
        return std::nullopt;
    }
    return Rational(1) / r;
}

inline std::optional<LaurentPoly> ring_inverse(const LaurentPoly &p) { return p.unit_inverse(); }

/// Power series c_0 + c_1 t + ... + c_N t^N, exact modulo t^(N+1).
///
/// The truncation order travels with the value. Binary operations on series of different
/// orders throw instead of silently truncating; use truncate() to lower an order explicitly.
template <coefficient_ring C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty()) {
            throw input_error("a truncated series needs at least the constant coefficient");
        }
    }

    // c0 + 0 t + ... up to order N.
    static TruncatedSeries constant(const C &c0, int order)
    {
        check_order(order);
        std::vector<C> v(static_cast<std::size_t>(order) + 1, zero_like(c0));
        v[0] = c0;
        return TruncatedSeries(std::move(v));
    }

    static TruncatedSeries one(const C &prototype, int order) { return constant(one_like(prototype), order); }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const C &operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<C> &coefficients() const { return coeffs_; }

    TruncatedSeries truncate(int order) const
    {
        check_order(order);
        if (order > this->order()) {
            throw input_error("cannot raise truncation order from " + std::to_string(this->order()) + " to "
                              + std::to_string(order));
        }
        return TruncatedSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    TruncatedSeries operator-() const
    {
        std::vector<C> v;
        v.reserve(coeffs_.size());
        for (const auto &c : coeffs_) {
            v.push_back(-c);
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        require_same_order(a, b, "add");
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            v.push_back(a.coeffs_[i] + b.coeffs_[i]);
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return a + (-b); }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        require_same_order(a, b, "mul");
        const std::size_t len = a.coeffs_.size();
        std::vector<C> v(len, zero_like(a.coeffs_[0]));
        for (std::size_t i = 0; i < len; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < len; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return TruncatedSeries(std::move(v));
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const Rational &s)
    {
        std::vector<C> v;
        v.reserve(a.coeffs_.size());
        for (const auto &c : a.coeffs_) {
            v.push_back(c * s);
        }
        return TruncatedSeries(std::move(v));
    }

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    /// Multiplicative inverse; the constant term must be a unit of the coefficient ring.
    TruncatedSeries inverse() const
    {
        auto inv0 = ring_inverse(coeffs_[0]);
        if (!inv0) {
            throw input_error("series constant term is not invertible");
        }
        const std::size_t len = coeffs_.size();
        std::vector<C> b;
        b.reserve(len);
        b.push_back(*inv0);
        for (std::size_t n = 1; n < len; ++n) {
            C acc = zero_like(coeffs_[0]);
            for (std::size_t k = 1; k <= n; ++k) {
                if (!is_zero(coeffs_[k])) {
                    acc = acc + coeffs_[k] * b[n - k];
                }
            }
            b.push_back(-(acc * *inv0));
        }
        return TruncatedSeries(std::move(b));
    }

    // t -> -t.
    TruncatedSeries negate_variable() const
    {
        std::vector<C> v = coeffs_;
        for (std::size_t n = 1; n < v.size(); n += 2) {
            v[n] = -v[n];
        }
        return TruncatedSeries(std::move(v));
    }

    // d/dt, known modulo t^N, hence of order N-1.
    TruncatedSeries derivative() const
    {
        if (order() < 1) {
            throw input_error("derivative of an order-0 series is undefined");
        }
        std::vector<C> v;
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            v.push_back(coeffs_[n] * Rational(static_cast<long>(n)));
        }
        return TruncatedSeries(std::move(v));
    }

    /// exp of a series with zero constant term: n e_n = sum_{k=1..n} k a_k e_{n-k}.
    TruncatedSeries exp() const
    {
        if (!is_zero(coeffs_[0])) {
            throw input_error("exp requires a series with zero constant term");
        }
        const std::size_t len = coeffs_.size();
        std::vector<C> e;
        e.reserve(len);
        e.push_back(one_like(coeffs_[0]));
        for (std::size_t n = 1; n < len; ++n) {
            C acc = zero_like(coeffs_[0]);
            for (std::size_t k = 1; k <= n; ++k) {
                if (!is_zero(coeffs_[k])) {
                    acc = acc + coeffs_[k] * e[n - k] * Rational(static_cast<long>(k));
                }
            }
            e.push_back(acc * Rational(1, static_cast<long>(n)));
        }
        return TruncatedSeries(std::move(e));
    }

    /// log of a series with constant term 1: n l_n = n a_n - sum_{k=1..n-1} k l_k a_{n-k}.
    TruncatedSeries log() const
    {
        if (!(coeffs_[0] == one_like(coeffs_[0]))) {
            throw input_error("log requires a series with constant term 1");
        }
        const std::size_t len = coeffs_.size();
        std::vector<C> l;
        l.reserve(len);
        l.push_back(zero_like(coeffs_[0]));
        for (std::size_t n = 1; n < len; ++n) {
            C acc = coeffs_[n] * Rational(static_cast<long>(n));
            for (std::size_t k = 1; k < n; ++k) {
                if (!is_zero(l[k]) && !is_zero(coeffs_[n - k])) {
                    acc = acc - l[k] * coeffs_[n - k] * Rational(static_cast<long>(k));
                }
            }
            l.push_back(acc * Rational(1, static_cast<long>(n)));
        }
        return TruncatedSeries(std::move(l));
    }

private:
    static void check_order(int order)
    {
        if (order < 0) {
            throw input_error("truncation order must be >= 0, got " + std::to_string(order));
        }
    }

    static void require_same_order(const TruncatedSeries &a, const TruncatedSeries &b, const char *op)
    {
        if (a.order() != b.order()) {
            throw input_error(std::string("truncation order mismatch in ") + op + ": " + std::to_string(a.order())
                              + " vs " + std::to_string(b.order()));
        }
    }

    std::vector<C> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using PolySeries = TruncatedSeries<LaurentPoly>;

inline constexpr int default_order = 10;

/// (1 - m t)^(-a) for a monomial m with coefficient 1 and any integer a.
PolySeries geometric_factor(const LaurentPoly &m, const Integer &a, int order);

/// (1 - t)^(-a) over the rationals.
RationalSeries geometric_factor(const Integer &a, int order);

// Generalised binomial coefficient a(a+1)...(a+n-1)/n!, the t^n coefficient of (1-t)^(-a).
Integer rising_binomial(const Integer &a, int n);

} // namespace symgen
