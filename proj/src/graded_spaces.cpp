#include "symgen/graded_spaces.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "symgen/error.hpp"

namespace symgen {

std::string Tridegree::to_string() const
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
}

VirtualGradedDims::VirtualGradedDims(const map_type &dims)
{
    for (const auto &[d, n] : dims) {
        add(d, n);
    }
}

void VirtualGradedDims::add(const Tridegree &d, std::int64_t n)
{
    if (n == 0) {
        return;
    }
    auto [it, inserted] = dims_.try_emplace(d, n);
    if (!inserted) {
        it->second += n;
        if (it->second == 0) {
            dims_.erase(it);
        }
    }
}

std::int64_t VirtualGradedDims::at(const Tridegree &d) const
{
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

GradedDims::GradedDims(const map_type &dims)
{
    for (const auto &[d, n] : dims) {
        add(d, n);
    }
}

GradedDims GradedDims::from_virtual(const VirtualGradedDims &v) { return GradedDims(v.entries()); }

void GradedDims::add(const Tridegree &d, std::int64_t n)
{
    if (n < 0) {
        throw input_error("graded dimension at " + d.to_string() + " must be nonnegative, got " + std::to_string(n));
    }
    if (n == 0) {
        return;
    }
    dims_[d] += n;
}

std::int64_t GradedDims::at(const Tridegree &d) const
{
    auto it = dims_.find(d);
    return it == dims_.end() ? 0 : it->second;
}

std::int64_t GradedDims::total_dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), std::int64_t{0},
                           [](std::int64_t acc, const auto &e) { return acc + e.second; });
}

GradedDims operator+(const GradedDims &a, const GradedDims &b)
{
    GradedDims r = a;
    for (const auto &[d, n] : b.dims_) {
        r.add(d, n);
    }
    return r;
}

GradedDims operator*(const GradedDims &a, const GradedDims &b)
{
    GradedDims r;
    for (const auto &[da, na] : a.dims_) {
        for (const auto &[db, nb] : b.dims_) {
            r.add(da + db, na * nb);
        }
    }
    return r;
}

GradedDims unit_dims()
{
    GradedDims u;
    u.add({0, 0, 0}, 1);
    return u;
}

GradedDims tensor_power(const GradedDims &v, int n)
{
    if (n < 0) {
        throw input_error("tensor power exponent must be >= 0");
    }
    GradedDims r = unit_dims();
    for (int i = 0; i < n; ++i) {
        r = r * v;
    }
    return r;
}

namespace {

template <class Map>
LaurentPoly hodge_poly_of(const Map &dims)
{
    LaurentPoly::term_map terms;
    for (const auto &[d, n] : dims) {
        const long sign = d.odd() ? -1 : 1;
        terms.emplace(Monomial{{d.p, d.q, d.k}}, Rational(sign * static_cast<long>(n)));
    }
    return LaurentPoly(hodge_variables(), std::move(terms));
}

} // namespace

LaurentPoly hodge_poly(const GradedDims &v) { return hodge_poly_of(v.entries()); }
LaurentPoly hodge_poly(const VirtualGradedDims &v) { return hodge_poly_of(v.entries()); }

VirtualGradedDims dims_from_hodge_poly(const LaurentPoly &h)
{
    if (!(h.variables() == hodge_variables())) {
        throw input_error("a Hodge polynomial must be over (y, x, z), got (" + h.variables().to_string() + ")");
    }
    VirtualGradedDims v;
    for (const auto &[m, c] : h.terms()) {
        if (!is_integral(c)) {
            throw input_error("Hodge polynomial coefficient " + c.get_str() + " is not an integer");
        }
        const Tridegree d{m.exponents[0], m.exponents[1], m.exponents[2]};
        const std::int64_t value = c.get_num().get_si();
        v.add(d, d.odd() ? -value : value);
    }
    return v;
}

namespace {

// Basis of V: one tridegree per basis vector.
std::vector<Tridegree> expand_basis(const GradedDims &v)
{
    std::vector<Tridegree> basis;
    for (const auto &[d, n] : v.entries()) {
        for (std::int64_t i = 0; i < n; ++i) {
            basis.push_back(d);
        }
    }
    return basis;
}

void check_guard(std::size_t dim, int n, const char *op)
{
    if (n < 0) {
        throw input_error(std::string(op) + ": tensor power must be >= 0");
    }
    long double size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<long double>(dim);
        if (size > static_cast<long double>(brute_force_limit)) {
            throw input_error(std::string(op) + ": dim(V)^n exceeds " + std::to_string(brute_force_limit)
                              + "; use the character path (phi_power or the generating series) instead");
        }
    }
}

struct SignedAction {
    int koszul = 1; // product of (-1)^(k_a k_b) over swapped pairs
    int parity = 1; // sign of the permutation itself
};

// Sign picked up by perm (position i -> perm[i]) acting on a tensor whose factors have the
// given degree parities, decomposed into adjacent transpositions.
SignedAction signed_action(const std::vector<int> &perm, const std::vector<bool> &odd)
{
    std::vector<int> dest = perm;
    std::vector<bool> par = odd;
    SignedAction s;
    const std::size_t n = dest.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        for (std::size_t j = 0; j + 1 < n - pass; ++j) {
            if (dest[j] > dest[j + 1]) {
                if (par[j] && par[j + 1]) {
                    s.koszul = -s.koszul;
                }
                s.parity = -s.parity;
                std::swap(dest[j], dest[j + 1]);
                std::swap(par[j], par[j + 1]);
            }
        }
    }
    return s;
}

// Rank of the (sign-twisted if `alternating`) averaging projector on V^{(x)n}.
GradedDims isotypic_rank_brute(const GradedDims &v, int n, bool alternating, const char *op)
{
    const auto basis = expand_basis(v);
    check_guard(basis.size(), n, op);
    if (n > brute_force_max_n && basis.size() > 0) {
        throw input_error(std::string(op) + ": n = " + std::to_string(n) + " exceeds " + std::to_string(brute_force_max_n)
                          + "; use the character path (phi_power or the generating series) instead");
    }
    if (n == 0) {
        return unit_dims();
    }
    GradedDims result;
    if (basis.empty()) {
        return result;
    }
    const int dim = static_cast<int>(basis.size());
    // Orbit representatives: nondecreasing tuples of basis indices.
    std::vector<int> rep(static_cast<std::size_t>(n), 0);
    while (true) {
        std::vector<bool> odd(rep.size());
        Tridegree total{};
        for (std::size_t i = 0; i < rep.size(); ++i) {
            const auto &d = basis[static_cast<std::size_t>(rep[i])];
            odd[i] = d.odd();
            total = total + d;
        }
        // Blocks of equal entries; the stabiliser permutes positions inside each block.
        std::vector<std::pair<std::size_t, std::size_t>> blocks;
        for (std::size_t i = 0; i < rep.size();) {
            std::size_t j = i;
            while (j < rep.size() && rep[j] == rep[i]) {
                ++j;
            }
            blocks.emplace_back(i, j);
            i = j;
        }
        std::vector<int> perm(rep.size());
        std::iota(perm.begin(), perm.end(), 0);
        long long character_sum = 0, stabiliser_order = 0;
        while (true) {
            const auto s = signed_action(perm, odd);
            character_sum += alternating ? s.koszul * s.parity : s.koszul;
            ++stabiliser_order;
            bool advanced = false;
            for (auto b = blocks.rbegin(); b != blocks.rend(); ++b) {
                auto first = perm.begin() + static_cast<std::ptrdiff_t>(b->first);
                auto last = perm.begin() + static_cast<std::ptrdiff_t>(b->second);
                if (std::next_permutation(first, last)) {
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                break;
            }
        }
        // On the span of one orbit the projector has rank <1_Stab, chi>, which is 0 or 1.
        if (character_sum != 0 && character_sum != stabiliser_order) {
            throw consistency_error(std::string(op) + ": orbit character sum " + std::to_string(character_sum)
                                    + " is not 0 or |Stab| = " + std::to_string(stabiliser_order));
        }
        if (character_sum == stabiliser_order) {
            result.add(total, 1);
        }
        // Next nondecreasing tuple.
        int pos = n - 1;
        while (pos >= 0 && rep[static_cast<std::size_t>(pos)] == dim - 1) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        const int next = rep[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < n; ++i) {
            rep[static_cast<std::size_t>(i)] = next;
        }
    }
    return result;
}

// Permutation of cycle type mu with cycles on consecutive blocks of positions.
std::vector<int> canonical_permutation(const Partition &mu)
{
    std::vector<int> perm;
    int start = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) {
            perm.push_back(start + (i + 1) % len);
        }
        start += len;
    }
    return perm;
}

} // namespace

GradedDims sym_power_brute(const GradedDims &v, int n) { return isotypic_rank_brute(v, n, false, "sym_power_brute"); }

GradedDims alt_power_brute(const GradedDims &v, int n) { return isotypic_rank_brute(v, n, true, "alt_power_brute"); }

VirtualGradedDims cycle_traces_brute(const GradedDims &v, const Partition &mu)
{
    const auto basis = expand_basis(v);
    const int n = mu.size();
    check_guard(basis.size(), n, "cycle_traces_brute");
    VirtualGradedDims traces;
    if (n == 0) {
        traces.add({0, 0, 0}, 1);
        return traces;
    }
    if (basis.empty()) {
        return traces;
    }
    const auto perm = canonical_permutation(mu);
    const int dim = static_cast<int>(basis.size());
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<bool> odd(tuple.size());
    while (true) {
        bool fixed = true;
        for (std::size_t i = 0; i < tuple.size() && fixed; ++i) {
            fixed = tuple[static_cast<std::size_t>(perm[i])] == tuple[i];
        }
        if (fixed) {
            Tridegree total{};
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                const auto &d = basis[static_cast<std::size_t>(tuple[i])];
                odd[i] = d.odd();
                total = total + d;
            }
            traces.add(total, signed_action(perm, odd).koszul);
        }
        int pos = n - 1;
        while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == dim - 1) {
            tuple[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++tuple[static_cast<std::size_t>(pos)];
    }
    return traces;
}

LaurentPoly cycle_supertrace(const GradedDims &v, const Partition &mu)
{
    const LaurentPoly h = hodge_poly(v);
    LaurentPoly result = one_like(h);
    for (int part : mu.parts()) {
        result *= h.adams(part);
    }
    return result;
}

VirtualGradedDims cycle_traces(const GradedDims &v, const Partition &mu)
{
    return dims_from_hodge_poly(cycle_supertrace(v, mu));
}

LaurentPoly cycle_supertrace_brute(const GradedDims &v, const Partition &mu)
{
    return hodge_poly(cycle_traces_brute(v, mu));
}

VirtualGradedDims phi_power(const GradedDims &v, const Functional &phi)
{
    std::map<Tridegree, Rational> acc;
    for (const auto &[mu, w] : phi.weights) {
        if (mu.size() != phi.n) {
            throw input_error("functional weight on " + mu.to_string() + " does not belong to S_"
                              + std::to_string(phi.n));
        }
        if (is_zero(w)) {
            continue;
        }
        const auto traces = cycle_traces(v, mu);
        for (const auto &[d, tr] : traces.entries()) {
            acc[d] += w * Rational(static_cast<long>(tr));
        }
    }
    VirtualGradedDims result;
    for (const auto &[d, value] : acc) {
        if (!is_integral(value)) {
            throw consistency_error("power operation produced non-integral dimension " + value.get_str() + " at "
                                    + d.to_string());
        }
        result.add(d, value.get_num().get_si());
    }
    return result;
}

GradedDims schur_multiplicity(const GradedDims &v, int n, const Partition &lambda)
{
    if (lambda.size() != n) {
        throw input_error("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
    }
    std::map<Tridegree, Rational> acc;
    const Integer n_fact = factorial(n);
    for (const auto &mu : partitions(n)) {
        const Integer weight = class_size(mu) * Integer(static_cast<long>(mn_character(lambda, mu)));
        if (weight == 0) {
            continue;
        }
        const auto traces = cycle_traces(v, mu);
        for (const auto &[d, tr] : traces.entries()) {
            acc[d] += Rational(weight * Integer(static_cast<long>(tr)));
        }
    }
    GradedDims result;
    for (auto &[d, value] : acc) {
        value /= Rational(n_fact);
        if (!is_integral(value) || sgn(value) < 0) {
            throw consistency_error("multiplicity of " + lambda.to_string() + " at " + d.to_string() + " is "
                                    + value.get_str() + ", not a nonnegative integer");
        }
        result.add(d, value.get_num().get_si());
    }
    return result;
}

} // namespace symgen
