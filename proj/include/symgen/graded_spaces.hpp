#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "symgen/laurent.hpp"
#include "symgen/sym_group.hpp"

// Dimension bookkeeping for bounded Z-graded objects in bigraded vector spaces, with the
// Koszul symmetry (-1)^(i*j) on the Z-grading. A basis vector of tridegree (p, q, k)
// contributes y^p x^q (-z)^k to the Hodge polynomial.
namespace symgen {

struct Tridegree {
    int p = 0;
    int q = 0;
    int k = 0;

    auto operator<=>(const Tridegree &) const = default;
    bool operator==(const Tridegree &) const = default;

    Tridegree operator+(const Tridegree &o) const { return {p + o.p, q + o.q, k + o.k}; }
    bool odd() const { return (k % 2) != 0; }
    std::string to_string() const;
};

/// Finitely supported (p, q, k) -> Z. Zero entries are not stored.
class VirtualGradedDims {
public:
    using map_type = std::map<Tridegree, std::int64_t>;

    VirtualGradedDims() = default;
    explicit VirtualGradedDims(const map_type &dims);

    void add(const Tridegree &d, std::int64_t n);
    std::int64_t at(const Tridegree &d) const;
    const map_type &entries() const { return dims_; }
    bool empty() const { return dims_.empty(); }

    friend bool operator==(const VirtualGradedDims &, const VirtualGradedDims &) = default;

private:
    map_type dims_;
};

/// Finitely supported (p, q, k) -> N: the graded dimension of an actual object.
class GradedDims {
public:
    using map_type = std::map<Tridegree, std::int64_t>;

    GradedDims() = default;
    // Throws input_error on negative entries.
    explicit GradedDims(const map_type &dims);
    // Throws input_error if some entry is negative.
    static GradedDims from_virtual(const VirtualGradedDims &v);

    void add(const Tridegree &d, std::int64_t n);
    std::int64_t at(const Tridegree &d) const;
    const map_type &entries() const { return dims_; }
    bool empty() const { return dims_.empty(); }
    std::int64_t total_dim() const;

    VirtualGradedDims as_virtual() const { return VirtualGradedDims(dims_); }

    // Direct sum: pointwise sum of dimensions.
    friend GradedDims operator+(const GradedDims &a, const GradedDims &b);
    // Tensor product: convolution over tridegrees.
    friend GradedDims operator*(const GradedDims &a, const GradedDims &b);

    friend bool operator==(const GradedDims &, const GradedDims &) = default;

private:
    map_type dims_;
};

// The one-dimensional unit object in degree (0, 0, 0).
GradedDims unit_dims();
GradedDims tensor_power(const GradedDims &v, int n);

/// sum_{p,q,k} dim * y^p x^q (-z)^k, over the variables (y, x, z).
LaurentPoly hodge_poly(const GradedDims &v);
LaurentPoly hodge_poly(const VirtualGradedDims &v);

/// Inverse of hodge_poly on virtual objects: coefficient c of y^p x^q z^k becomes (-1)^k c.
/// Throws input_error on non-integer coefficients or a variable set other than (y, x, z).
VirtualGradedDims dims_from_hodge_poly(const LaurentPoly &h);

// Refuses to enumerate V^{(x)n} once dim(V)^n exceeds this bound.
inline constexpr std::int64_t brute_force_limit = 1'000'000;
// The projector oracle also walks every orbit stabiliser, which is at worst all of S_n.
inline constexpr int brute_force_max_n = 10;

/// Graded dimension of the S_n-invariants of V^{(x)n} under the Koszul-signed permutation
/// action, found by enumerating basis tensors and the stabiliser of each orbit.
GradedDims sym_power_brute(const GradedDims &v, int n);
/// Same for the sign-isotypic part (action twisted by the sign character).
GradedDims alt_power_brute(const GradedDims &v, int n);

/// Per-tridegree trace of a permutation of cycle type mu on V^{(x)n}, by enumerating
/// basis tensors. Entries are honest traces (no (-1)^k weighting).
VirtualGradedDims cycle_traces_brute(const GradedDims &v, const Partition &mu);
/// The same traces from the closed form prod_i Psi_{mu_i}(h(V)).
VirtualGradedDims cycle_traces(const GradedDims &v, const Partition &mu);

/// Signed graded trace reported through the (-z)^k convention; equals prod_i Psi_{mu_i}(h(V)).
LaurentPoly cycle_supertrace(const GradedDims &v, const Partition &mu);
LaurentPoly cycle_supertrace_brute(const GradedDims &v, const Partition &mu);

/// Apply a functional on S_n class functions degreewise: R(d) = sum_mu w_mu trace_d(mu).
/// Throws consistency_error if the result is not integral.
VirtualGradedDims phi_power(const GradedDims &v, const Functional &phi);

/// Graded multiplicity of the irreducible S_lambda inside V^{(x)n}:
///   m(d) = (1/n!) sum_mu |C_mu| chi_lambda(mu) trace_d(mu).
/// A negative or fractional value raises consistency_error.
GradedDims schur_multiplicity(const GradedDims &v, int n, const Partition &lambda);

} // namespace symgen
