#include "symgen/prelambda.hpp"

namespace symgen {

RationalSeries sigma_series(const Integer &a, int order) { return geometric_factor(a, order); }

PolySeries sigma_series(const LaurentPoly &a, int order)
{
    if (!a.has_integer_coefficients()) {
        throw input_error("the Laurent pre-lambda structure needs integer coefficients, got '" + a.to_string() + "'");
    }
    auto result = PolySeries::one(a, order);
    for (const auto &[m, c] : a.terms()) {
        const auto unit = LaurentPoly::monomial(a.variables(), m.exponents);
        result = result * geometric_factor(unit, c.get_num(), order);
    }
    return result;
}

AnySeries sigma_series(const PreLambdaElement &a, int order)
{
    return std::visit([order](const auto &v) -> AnySeries { return sigma_series(v, order); }, a);
}

RationalSeries lambda_series(const Integer &a, int order) { return sigma_series(a, order).negate_variable().inverse(); }

PolySeries lambda_series(const LaurentPoly &a, int order)
{
    return sigma_series(a, order).negate_variable().inverse();
}

AnySeries lambda_series(const PreLambdaElement &a, int order)
{
    return std::visit([order](const auto &v) -> AnySeries { return lambda_series(v, order); }, a);
}

std::vector<LaurentPoly> adams_sequence(const LaurentPoly &p, int order)
{
    std::vector<LaurentPoly> psi;
    psi.reserve(static_cast<std::size_t>(order > 0 ? order : 0));
    for (int r = 1; r <= order; ++r) {
        psi.push_back(p.adams(r));
    }
    return psi;
}

} // namespace symgen
