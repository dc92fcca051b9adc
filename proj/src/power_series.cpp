#include "symgen/power_series.hpp"

namespace symgen {

Integer rising_binomial(const Integer &a, int n)
{
    Integer num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= a + i;
        den *= i + 1;
    }
    return num / den;
}

PolySeries geometric_factor(const LaurentPoly &m, const Integer &a, int order)
{
    if (!m.is_unit_monomial() || m.terms().begin()->second != 1) {
        throw input_error("geometric factor needs a single monomial with coefficient 1, got '" + m.to_string() + "'");
    }
    if (order < 0) {
        throw input_error("truncation order must be >= 0, got " + std::to_string(order));
    }
    std::vector<LaurentPoly> v;
    v.reserve(static_cast<std::size_t>(order) + 1);
    LaurentPoly power = one_like(m);
    for (int n = 0; n <= order; ++n) {
        v.push_back(power * Rational(rising_binomial(a, n)));
        power *= m;
    }
    return PolySeries(std::move(v));
}

RationalSeries geometric_factor(const Integer &a, int order)
{
    if (order < 0) {
        throw input_error("truncation order must be >= 0, got " + std::to_string(order));
    }
    std::vector<Rational> v;
    for (int n = 0; n <= order; ++n) {
        v.emplace_back(rising_binomial(a, n));
    }
    return RationalSeries(std::move(v));
}

} // namespace symgen
