#include "symgen/genera.hpp"

#include <algorithm>
#include <array>

#include "symgen/error.hpp"
#include "symgen/graded_spaces.hpp"
#include "symgen/prelambda.hpp"

namespace symgen {

namespace {

constexpr std::array<std::pair<GenusKind, std::string_view>, 6> kind_names{{
    {GenusKind::hodge, "hodge"},
    {GenusKind::e, "e"},
    {GenusKind::chi_y, "chi_y"},
    {GenusKind::betti, "betti"},
    {GenusKind::euler, "euler"},
    {GenusKind::signature, "signature"},
}};

bool is_polynomial_kind(GenusKind kind)
{
    return kind == GenusKind::hodge || kind == GenusKind::e || kind == GenusKind::chi_y || kind == GenusKind::betti;
}

void require_integral(const PolySeries &s, const std::string &what)
{
    for (std::size_t n = 0; n < s.coefficients().size(); ++n) {
        if (!s[n].has_integer_coefficients()) {
            throw consistency_error(what + ": coefficient of t^" + std::to_string(n) + " is not integral: "
                                    + s[n].to_string());
        }
    }
}

void require_integral(const RationalSeries &s, const std::string &what)
{
    for (std::size_t n = 0; n < s.coefficients().size(); ++n) {
        if (!is_integral(s[n])) {
            throw consistency_error(what + ": coefficient of t^" + std::to_string(n) + " is not integral: "
                                    + s[n].get_str());
        }
    }
}

template <class Series>
void require_equal(const Series &product_form, const Series &exp_form, const std::string &what)
{
    if (!(product_form == exp_form)) {
        for (std::size_t n = 0; n < product_form.coefficients().size(); ++n) {
            if (!(product_form[n] == exp_form[n])) {
                throw consistency_error(what + ": product form and exp form differ at t^" + std::to_string(n));
            }
        }
    }
}

Integer evaluate_at(const LaurentPoly &p, const std::string &var, long value)
{
    return p.specialize({{var, Rational(value)}}).constant_value().get_num();
}

} // namespace

std::string_view to_string(GenusKind kind)
{
    for (const auto &[k, name] : kind_names) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

GenusKind parse_genus_kind(std::string_view name)
{
    for (const auto &[k, n] : kind_names) {
        if (n == name) {
            return k;
        }
    }
    throw input_error("unknown invariant kind '" + std::string(name)
                      + "' (expected hodge, e, chi_y, betti, euler or signature)");
}

const VariableSet &variables_for(GenusKind kind)
{
    switch (kind) {
    case GenusKind::hodge:
        return hodge_variables();
    case GenusKind::e:
        return e_variables();
    case GenusKind::chi_y:
        return chi_y_variables();
    case GenusKind::betti:
        return betti_variables();
    default:
        return scalar_variables();
    }
}

GenusProfile GenusProfile::polynomial(std::string name, GenusKind kind, LaurentPoly data, bool compact_support)
{
    GenusProfile p{std::move(name), kind, std::move(data), compact_support};
    p.validate();
    return p;
}

GenusProfile GenusProfile::euler(std::string name, Integer chi)
{
    return GenusProfile{std::move(name), GenusKind::euler, std::move(chi), false};
}

GenusProfile GenusProfile::signature(std::string name, Integer sigma, Integer chi)
{
    return GenusProfile{std::move(name), GenusKind::signature, SignatureData{std::move(sigma), std::move(chi)}, false};
}

LaurentPoly GenusProfile::as_poly() const
{
    if (const auto *p = std::get_if<LaurentPoly>(&data)) {
        return *p;
    }
    if (const auto *z = std::get_if<Integer>(&data)) {
        return LaurentPoly(scalar_variables(), Rational(*z));
    }
    throw input_error("profile '" + name + "' carries signature data, not a polynomial");
}

void GenusProfile::validate() const
{
    const std::string where = "profile '" + name + "' (" + std::string(to_string(kind)) + ")";
    if (is_polynomial_kind(kind)) {
        const auto *p = std::get_if<LaurentPoly>(&data);
        if (p == nullptr) {
            throw input_error(where + " needs polynomial data");
        }
        if (!(p->variables() == variables_for(kind))) {
            throw input_error(where + " must be a polynomial in (" + variables_for(kind).to_string() + "), got ("
                              + p->variables().to_string() + ")");
        }
        if (!p->has_integer_coefficients()) {
            throw input_error(where + " has non-integer coefficients: " + p->to_string());
        }
        if (kind == GenusKind::hodge) {
            const auto dims = dims_from_hodge_poly(*p);
            for (const auto &[d, n] : dims.entries()) {
                if (n < 0) {
                    throw input_error(where + ": coefficient of y^" + std::to_string(d.p) + " x^" + std::to_string(d.q)
                                      + " z^" + std::to_string(d.k) + " has the wrong sign for (-z)^k numbering");
                }
            }
        }
        if (kind == GenusKind::betti) {
            for (const auto &[m, c] : p->terms()) {
                const bool odd = (m.exponents[0] % 2) != 0;
                if ((odd && sgn(c) > 0) || (!odd && sgn(c) < 0)) {
                    throw input_error(where + ": coefficient of z^" + std::to_string(m.exponents[0])
                                      + " has the wrong sign for (-z)^k numbering");
                }
            }
        }
        return;
    }
    if (kind == GenusKind::euler && !std::holds_alternative<Integer>(data)) {
        throw input_error(where + " needs an integer Euler characteristic");
    }
    if (kind == GenusKind::signature) {
        const auto *s = std::get_if<SignatureData>(&data);
        if (s == nullptr) {
            throw input_error(where + " needs a (sigma, chi) pair");
        }
        if (((s->sigma - s->chi) % 2) != 0) {
            throw input_error(where + ": signature " + s->sigma.get_str() + " and Euler characteristic "
                              + s->chi.get_str() + " must have the same parity");
        }
    }
}

PolySeries lift_scalar_series(const RationalSeries &s)
{
    std::vector<LaurentPoly> v;
    v.reserve(s.coefficients().size());
    for (const auto &c : s.coefficients()) {
        v.emplace_back(scalar_variables(), c);
    }
    return PolySeries(std::move(v));
}

PolySeries specialize_series(const PolySeries &s, const std::map<std::string, LaurentPoly::Value> &assignment)
{
    std::vector<LaurentPoly> v;
    v.reserve(s.coefficients().size());
    for (const auto &c : s.coefficients()) {
        v.push_back(c.specialize(assignment));
    }
    return PolySeries(std::move(v));
}

namespace {

RationalSeries euler_series(const Integer &chi, int order, const std::string &what)
{
    const auto product_form = sigma_series(chi, order);
    const std::vector<Rational> psi(static_cast<std::size_t>(order), Rational(chi));
    const auto exp_form = sigma_from_adams(psi, order, Rational(0));
    require_equal(product_form, exp_form, what);
    require_integral(product_form, what);
    return product_form;
}

} // namespace

PolySeries symmetric_series(const GenusProfile &profile, int order)
{
    profile.validate();
    const std::string what = "symmetric series of '" + profile.name + "'";
    switch (profile.kind) {
    case GenusKind::euler:
        return lift_scalar_series(euler_series(std::get<Integer>(profile.data), order, what));
    case GenusKind::signature: {
        const auto &s = std::get<SignatureData>(profile.data);
        return lift_scalar_series(signature_series(s.sigma, s.chi, order));
    }
    default:
        break;
    }
    const LaurentPoly data = profile.as_poly();
    const auto product_form = sigma_series(data, order);
    const auto exp_form = sigma_from_adams(adams_sequence(data, order), order, data);
    require_equal(product_form, exp_form, what);
    require_integral(product_form, what);
    return product_form;
}

PolySeries configuration_series(const GenusProfile &profile, int order)
{
    profile.validate();
    if (profile.kind != GenusKind::hodge && profile.kind != GenusKind::e && profile.kind != GenusKind::chi_y) {
        throw input_error("configuration series need a hodge, e or chi_y profile, '" + profile.name + "' is "
                          + std::string(to_string(profile.kind)));
    }
    const std::string what = "configuration series of '" + profile.name + "'";
    const LaurentPoly data = profile.as_poly();

    // prod_m (1 + m t)^(a_m) = [prod_m (1 - m t)^(a_m)] at t -> -t.
    auto product_form = PolySeries::one(data, order);
    for (const auto &[m, c] : data.terms()) {
        const auto unit = LaurentPoly::monomial(data.variables(), m.exponents);
        product_form = product_form * geometric_factor(unit, -c.get_num(), order);
    }
    product_form = product_form.negate_variable();

    // exp(-sum_r Psi_r (-t)^r / r) = [exp(sum_r -Psi_r t^r / r)] at t -> -t.
    auto psi = adams_sequence(data, order);
    for (auto &p : psi) {
        p = -p;
    }
    const auto exp_form = sigma_from_adams(psi, order, data).negate_variable();

    require_equal(product_form, exp_form, what);
    require_equal(product_form, lambda_series(data, order), what + " (lambda_t route)");
    require_integral(product_form, what);
    return product_form;
}

RationalSeries signature_series(const Integer &sigma, const Integer &chi, int order)
{
    if (((sigma - chi) % 2) != 0) {
        throw input_error("signature " + sigma.get_str() + " and Euler characteristic " + chi.get_str()
                          + " must have the same parity");
    }
    const Integer plus_exponent = (sigma - chi) / 2; // power of (1 + t)
    const Integer minus_exponent = (sigma + chi) / 2; // power of (1 - t)^(-1)
    // (1 + t)^a = sigma_{-t}(-a) in the pre-lambda ring Z.
    const auto closed_form = sigma_series(minus_exponent, order) * sigma_series(Integer(-plus_exponent), order).negate_variable();
    // log of the closed form is sum_r Psi_r t^r / r with Psi_r = sigma (r odd), chi (r even).
    std::vector<Rational> psi;
    for (int r = 1; r <= order; ++r) {
        psi.emplace_back(r % 2 == 1 ? sigma : chi);
    }
    const auto exp_form = sigma_from_adams(psi, order, Rational(0));
    const std::string what = "signature series (" + sigma.get_str() + ", " + chi.get_str() + ")";
    require_equal(closed_form, exp_form, what);
    require_integral(closed_form, what);
    return closed_form;
}

RationalSeries signature_series(const GenusProfile &chi_y_profile, int order)
{
    if (chi_y_profile.kind != GenusKind::chi_y) {
        throw input_error("signature cross-check needs a chi_y profile");
    }
    chi_y_profile.validate();
    const LaurentPoly data = chi_y_profile.as_poly();
    const Integer sigma = evaluate_at(data, "y", -1);
    const Integer chi = evaluate_at(data, "y", 1);
    const auto closed_form = signature_series(sigma, chi, order);
    const auto via_chi_y = specialize_series(symmetric_series(chi_y_profile, order), {{"y", Rational(-1)}});
    for (std::size_t n = 0; n < closed_form.coefficients().size(); ++n) {
        if (via_chi_y[n].constant_value() != closed_form[n]) {
            throw consistency_error("signature series of '" + chi_y_profile.name
                                    + "' disagrees with its chi_y series at y = -1 at t^" + std::to_string(n));
        }
    }
    return closed_form;
}

LaurentPoly invariant_of_symmetric_product(const GenusProfile &profile, int n)
{
    if (n < 0) {
        throw input_error("symmetric power index must be >= 0");
    }
    return symmetric_series(profile, n)[static_cast<std::size_t>(n)];
}

SpecializedInvariants specialization_bridge(const GenusProfile &hodge_profile)
{
    if (hodge_profile.kind != GenusKind::hodge) {
        throw input_error("specialization needs a hodge profile, '" + hodge_profile.name + "' is "
                          + std::string(to_string(hodge_profile.kind)));
    }
    hodge_profile.validate();
    const LaurentPoly h = hodge_profile.as_poly();
    SpecializedInvariants out{
        .e = h.specialize({{"z", Rational(1)}}),
        .chi_y = LaurentPoly(chi_y_variables()),
        .betti = h.specialize({{"y", Rational(1)}, {"x", Rational(1)}}),
        .euler = 0,
        .arithmetic_genus = std::nullopt,
        .signature = std::nullopt,
    };
    out.chi_y = out.e.specialize({{"x", Rational(1)}});
    out.euler = evaluate_at(out.betti, "z", 1);
    const bool negative_y = std::any_of(out.chi_y.terms().begin(), out.chi_y.terms().end(),
                                        [](const auto &t) { return t.first.exponents[0] < 0; });
    if (!negative_y) {
        out.arithmetic_genus = evaluate_at(out.chi_y, "y", 0);
    }
    const Integer sigma = evaluate_at(out.chi_y, "y", -1);
    if (((sigma - out.euler) % 2) == 0) {
        out.signature = SignatureData{sigma, out.euler};
    }
    return out;
}

GenusProfile SpecializedInvariants::e_profile(const std::string &name) const
{
    return GenusProfile::polynomial(name, GenusKind::e, e);
}

GenusProfile SpecializedInvariants::chi_y_profile(const std::string &name) const
{
    return GenusProfile::polynomial(name, GenusKind::chi_y, chi_y);
}

GenusProfile SpecializedInvariants::betti_profile(const std::string &name) const
{
    return GenusProfile::polynomial(name, GenusKind::betti, betti);
}

GenusProfile SpecializedInvariants::euler_profile(const std::string &name) const
{
    return GenusProfile::euler(name, euler);
}

} // namespace symgen
