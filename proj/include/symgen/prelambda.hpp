#pragma once

#include <span>
#include <variant>
#include <vector>

#include "symgen/laurent.hpp"
#include "symgen/power_series.hpp"

// Pre-lambda structures on Z and on Laurent polynomial rings.
//
//   Z:            sigma_t(a) = (1 - t)^(-a),                        Psi_r(a) = a
//   Laurent ring: sigma_t(sum a_m m) = prod_m (1 - m t)^(-a_m),     Psi_r(p) = p(x_1^r, ..., x_n^r)
//
// In both, lambda_t(a) = sigma_{-t}(a)^(-1) and sigma_t(a) = exp(sum_r Psi_r(a) t^r / r).
namespace symgen {

using PreLambdaElement = std::variant<Integer, LaurentPoly>;
using AnySeries = std::variant<RationalSeries, PolySeries>;

RationalSeries sigma_series(const Integer &a, int order);
// Requires integer coefficients.
PolySeries sigma_series(const LaurentPoly &a, int order);
AnySeries sigma_series(const PreLambdaElement &a, int order);

RationalSeries lambda_series(const Integer &a, int order);
PolySeries lambda_series(const LaurentPoly &a, int order);
AnySeries lambda_series(const PreLambdaElement &a, int order);

/// Psi_1..Psi_N of a series s = exp(sum Psi_r t^r / r), read off from log(s). Requires s_0 = 1.
template <coefficient_ring C>
std::vector<C> adams_from_sigma(const TruncatedSeries<C> &s)
{
    if (!(s[0] == one_like(s[0]))) {
        throw input_error("Adams extraction needs a series with constant term 1");
    }
    const auto l = s.log();
    std::vector<C> psi;
    psi.reserve(static_cast<std::size_t>(s.order()));
    for (int r = 1; r <= s.order(); ++r) {
        psi.push_back(l[static_cast<std::size_t>(r)] * Rational(r));
    }
    return psi;
}

/// Same as adams_from_sigma, but through the logarithmic derivative of lambda_t = sigma_{-t}^(-1):
///   lambda_t' = lambda_t * sum_r (-1)^(r-1) Psi_r t^(r-1),
/// solved coefficientwise as r lambda_r = sum_{i=1..r} (-1)^(i-1) Psi_i lambda_{r-i}.
/// Uses no division except by lambda_0 = 1, so integral inputs stay integral throughout.
template <coefficient_ring C>
std::vector<C> adams_from_sigma_newton(const TruncatedSeries<C> &s)
{
    if (!(s[0] == one_like(s[0]))) {
        throw input_error("Adams extraction needs a series with constant term 1");
    }
    const auto lam = s.negate_variable().inverse();
    std::vector<C> psi;
    psi.reserve(static_cast<std::size_t>(s.order()));
    for (int r = 1; r <= s.order(); ++r) {
        C acc = lam[static_cast<std::size_t>(r)] * Rational(r);
        for (int i = 1; i < r; ++i) {
            C term = psi[static_cast<std::size_t>(i - 1)] * lam[static_cast<std::size_t>(r - i)];
            if (i % 2 == 1) {
                acc = acc - term;
            } else {
                acc = acc + term;
            }
        }
        // The i = r term carries sign (-1)^(r-1) and lambda_0 = 1.
        if (r % 2 == 0) {
            acc = -acc;
        }
        psi.push_back(std::move(acc));
    }
    return psi;
}

/// exp(sum_{r=1..N} Psi_r t^r / r). psi must hold at least N entries.
template <coefficient_ring C>
TruncatedSeries<C> sigma_from_adams(std::span<const C> psi, int order, const C &prototype)
{
    if (order < 0) {
        throw input_error("truncation order must be >= 0");
    }
    if (psi.size() < static_cast<std::size_t>(order)) {
        throw input_error("need " + std::to_string(order) + " Adams terms, got " + std::to_string(psi.size()));
    }
    std::vector<C> g;
    g.reserve(static_cast<std::size_t>(order) + 1);
    g.push_back(zero_like(prototype));
    for (int r = 1; r <= order; ++r) {
        g.push_back(psi[static_cast<std::size_t>(r - 1)] * Rational(Integer(1), Integer(r)));
    }
    return TruncatedSeries<C>(std::move(g)).exp();
}

template <coefficient_ring C>
TruncatedSeries<C> sigma_from_adams(const std::vector<C> &psi, int order, const C &prototype)
{
    return sigma_from_adams(std::span<const C>(psi), order, prototype);
}

// Psi_r for r = 1..N straight from the ring's Adams operation.
std::vector<LaurentPoly> adams_sequence(const LaurentPoly &p, int order);

} // namespace symgen
