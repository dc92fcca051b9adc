#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "symgen/laurent.hpp"
#include "symgen/power_series.hpp"

namespace symgen {

enum class GenusKind { hodge, e, chi_y, betti, euler, signature };

std::string_view to_string(GenusKind kind);
// Throws input_error on an unknown name.
GenusKind parse_genus_kind(std::string_view name);
// Variables of the data polynomial; scalar_variables() for euler and signature.
const VariableSet &variables_for(GenusKind kind);

struct SignatureData {
    Integer sigma;
    Integer chi;
};

/// Invariants of a single space X, as input to the generating-series formulas.
///
/// hodge:  sum h^{p,q,k} y^p x^q (-z)^k      e:      sum e^{p,q} y^p x^q
/// chi_y:  chi_{-y}(X) = sum f^p y^p         betti:  sum b_k (-z)^k
/// euler:  chi(X)                            signature: (sigma(X), chi(X))
///
/// compact_support only labels the data; the formulas are the same for both cases.
struct GenusProfile {
    std::string name;
    GenusKind kind = GenusKind::hodge;
    std::variant<LaurentPoly, Integer, SignatureData> data;
    bool compact_support = false;

    static GenusProfile polynomial(std::string name, GenusKind kind, LaurentPoly data, bool compact_support = false);
    static GenusProfile euler(std::string name, Integer chi);
    static GenusProfile signature(std::string name, Integer sigma, Integer chi);

    // Data as a polynomial over variables_for(kind); euler data becomes a constant.
    LaurentPoly as_poly() const;
    // Throws input_error when the data does not fit the kind.
    void validate() const;
};

/// sum_n I(X^(n)) t^n. Scalar kinds (euler, signature) come back as constants over the
/// empty variable set. Every coefficient is checked to be integral.
///
/// The product form prod_m (1 - m t)^(-a_m) and the exp form exp(sum_r Psi_r(data) t^r / r)
/// are both evaluated; disagreement raises consistency_error.
PolySeries symmetric_series(const GenusProfile &profile, int order);

/// sum_n I(X^{n}) t^n over unordered configuration spaces: prod_m (1 + m t)^(a_m), checked
/// against exp(-sum_r Psi_r(data) (-t)^r / r). Only hodge, e and chi_y profiles.
PolySeries configuration_series(const GenusProfile &profile, int order);

/// (1 + t)^((sigma - chi)/2) / (1 - t)^((sigma + chi)/2). sigma and chi must have equal parity.
RationalSeries signature_series(const Integer &sigma, const Integer &chi, int order);

/// Signature series of a chi_y profile, with (sigma, chi) = (chi_{-y} at y = -1, at y = 1),
/// cross-checked against the chi_y series specialised at y = -1.
RationalSeries signature_series(const GenusProfile &chi_y_profile, int order);

// Coefficient of t^n in symmetric_series(profile, n).
LaurentPoly invariant_of_symmetric_product(const GenusProfile &profile, int n);

struct SpecializedInvariants {
    LaurentPoly e;       // z = 1
    LaurentPoly chi_y;   // z = x = 1
    LaurentPoly betti;   // y = x = 1
    Integer euler;       // y = x = z = 1
    std::optional<Integer> arithmetic_genus; // chi_y at y = 0; absent if y occurs with a negative power
    std::optional<SignatureData> signature; // (chi_y at y = -1, euler) when parities agree

    GenusProfile e_profile(const std::string &name) const;
    GenusProfile chi_y_profile(const std::string &name) const;
    GenusProfile betti_profile(const std::string &name) const;
    GenusProfile euler_profile(const std::string &name) const;
};

SpecializedInvariants specialization_bridge(const GenusProfile &hodge_profile);

// Lift an integer-valued rational series to constants over the empty variable set.
PolySeries lift_scalar_series(const RationalSeries &s);

// Substitute into every coefficient.
PolySeries specialize_series(const PolySeries &s, const std::map<std::string, LaurentPoly::Value> &assignment);

} // namespace symgen
