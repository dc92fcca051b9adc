#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "symgen/rational.hpp"

namespace symgen {

/// Ordered list of distinct, non-empty variable names. Cheap to copy.
class VariableSet {
public:
    VariableSet();
    explicit VariableSet(std::vector<std::string> names);
    VariableSet(std::initializer_list<std::string> names);

    // One variable per character: "yxz" -> (y, x, z).
    static VariableSet from_letters(std::string_view letters);

    std::size_t size() const { return names_->size(); }
    bool empty() const { return names_->empty(); }
    const std::string &operator[](std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string> &names() const { return *names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Concatenated names, e.g. "yxz".
    std::string to_string() const;

    friend bool operator==(const VariableSet &a, const VariableSet &b)
    {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

// The canonical sets used throughout the genera computations.
const VariableSet &hodge_variables();  // (y, x, z)
const VariableSet &e_variables();      // (y, x)
const VariableSet &chi_y_variables();  // (y)
const VariableSet &betti_variables();  // (z)
const VariableSet &scalar_variables(); // ()

/// Exponent vector aligned with a VariableSet. Ordering is lexicographic.
struct Monomial {
    std::vector<int> exponents;

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;

    bool is_one() const;
};

/// Sparse Laurent polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is ring equality.
/// Binary operations require identical variable sets and throw input_error otherwise.
class LaurentPoly {
public:
    using term_map = std::map<Monomial, Rational>;

    explicit LaurentPoly(VariableSet vars = scalar_variables());
    LaurentPoly(VariableSet vars, const Rational &constant);
    LaurentPoly(VariableSet vars, term_map terms);

    static LaurentPoly monomial(VariableSet vars, std::vector<int> exponents, const Rational &coeff = 1);
    static LaurentPoly variable(VariableSet vars, std::string_view name, int exponent = 1);

    const VariableSet &variables() const { return vars_; }
    const term_map &terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Single term (any nonzero coefficient).
    bool is_unit_monomial() const;
    bool has_integer_coefficients() const;
    // Constant term as a rational; throws unless is_constant().
    Rational constant_value() const;

    Rational coefficient(const Monomial &m) const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    LaurentPoly &operator*=(const Rational &scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &s) { return a *= s; }
    friend LaurentPoly operator*(const Rational &s, LaurentPoly a) { return a *= s; }

    LaurentPoly pow(unsigned e) const;

    /// Adams substitution: every exponent multiplied by r (r >= 1).
    LaurentPoly adams(int r) const;

    using Value = std::variant<Rational, LaurentPoly>;
    /// Substitute values for some variables. Rational values and polynomial values are
    /// expressed over the remaining variables, which form the variable set of the result.
    LaurentPoly specialize(const std::map<std::string, Value> &assignment) const;

    // Inverse of a unit monomial c*m, i.e. (1/c)*m^-1.
    std::optional<LaurentPoly> unit_inverse() const;

    std::string to_string() const;

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    void require_same_vars(const LaurentPoly &other, const char *op) const;

    VariableSet vars_;
    term_map terms_;
};

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p);

// Monomial text without coefficient, e.g. "y*x^-1"; "1" for the empty monomial.
std::string monomial_to_string(const VariableSet &vars, const Monomial &m);

// Coefficient-ring hooks used by TruncatedSeries.
inline LaurentPoly zero_like(const LaurentPoly &p) { return LaurentPoly(p.variables()); }
inline LaurentPoly one_like(const LaurentPoly &p) { return LaurentPoly(p.variables(), Rational(1)); }
inline bool is_zero(const LaurentPoly &p) { return p.is_zero(); }

} // namespace symgen
