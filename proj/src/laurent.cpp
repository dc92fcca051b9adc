#include "symgen/laurent.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "symgen/error.hpp"

namespace symgen {

VariableSet::VariableSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VariableSet::VariableSet(std::vector<std::string> names)
{
    std::set<std::string> seen;
    for (const auto &n : names) {
        if (n.empty()) {
            throw input_error("variable names must be non-empty");
        }
        if (!seen.insert(n).second) {
            throw input_error("duplicate variable name '" + n + "'");
        }
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VariableSet::VariableSet(std::initializer_list<std::string> names) : VariableSet(std::vector<std::string>(names)) {}

VariableSet VariableSet::from_letters(std::string_view letters)
{
    std::vector<std::string> names;
    for (char c : letters) {
        names.emplace_back(1, c);
    }
    return VariableSet(std::move(names));
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const
{
    const auto &v = *names_;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::string VariableSet::to_string() const
{
    std::string out;
    for (const auto &n : *names_) {
        out += n;
    }
    return out;
}

const VariableSet &hodge_variables()
{
    static const VariableSet v{"y", "x", "z"};
    return v;
}

const VariableSet &e_variables()
{
    static const VariableSet v{"y", "x"};
    return v;
}

const VariableSet &chi_y_variables()
{
    static const VariableSet v{"y"};
    return v;
}

const VariableSet &betti_variables()
{
    static const VariableSet v{"z"};
    return v;
}

const VariableSet &scalar_variables()
{
    static const VariableSet v;
    return v;
}

bool Monomial::is_one() const
{
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

LaurentPoly::LaurentPoly(VariableSet vars) : vars_(std::move(vars)) {}

LaurentPoly::LaurentPoly(VariableSet vars, const Rational &constant) : vars_(std::move(vars))
{
    if (!symgen::is_zero(constant)) {
        terms_.emplace(Monomial{std::vector<int>(vars_.size(), 0)}, constant);
    }
}

LaurentPoly::LaurentPoly(VariableSet vars, term_map terms) : vars_(std::move(vars))
{
    for (auto &[m, c] : terms) {
        if (m.exponents.size() != vars_.size()) {
            throw input_error("monomial arity does not match variable set");
        }
        if (!symgen::is_zero(c)) {
            terms_.emplace(m, std::move(c));
        }
    }
}

LaurentPoly LaurentPoly::monomial(VariableSet vars, std::vector<int> exponents, const Rational &coeff)
{
    if (exponents.size() != vars.size()) {
        throw input_error("monomial arity does not match variable set");
    }
    term_map t;
    t.emplace(Monomial{std::move(exponents)}, coeff);
    return LaurentPoly(std::move(vars), std::move(t));
}

LaurentPoly LaurentPoly::variable(VariableSet vars, std::string_view name, int exponent)
{
    auto idx = vars.index_of(name);
    if (!idx) {
        throw input_error("unknown variable '" + std::string(name) + "'");
    }
    std::vector<int> e(vars.size(), 0);
    e[*idx] = exponent;
    return monomial(std::move(vars), std::move(e));
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool LaurentPoly::is_unit_monomial() const { return terms_.size() == 1; }

bool LaurentPoly::has_integer_coefficients() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return is_integral(t.second); });
}

Rational LaurentPoly::constant_value() const
{
    if (!is_constant()) {
        throw input_error("polynomial '" + to_string() + "' is not a constant");
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational LaurentPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::require_same_vars(const LaurentPoly &other, const char *op) const
{
    if (!(vars_ == other.vars_)) {
        throw input_error(std::string("variable set mismatch in ") + op + ": (" + vars_.to_string() + ") vs ("
                          + other.vars_.to_string() + ")");
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r(*this);
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    require_same_vars(other, "add");
    for (const auto &[m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (symgen::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    require_same_vars(other, "sub");
    for (const auto &[m, c] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (symgen::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    a.require_same_vars(b, "mul");
    LaurentPoly r(a.vars_);
    const std::size_t nv = a.vars_.size();
    Monomial m{std::vector<int>(nv)};
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < nv; ++i) {
                m.exponents[i] = ma.exponents[i] + mb.exponents[i];
            }
            auto [it, inserted] = r.terms_.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(r.terms_, [](const auto &t) { return symgen::is_zero(t.second); });
    return r;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &scalar)
{
    if (symgen::is_zero(scalar)) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, c] : terms_) {
        c *= scalar;
    }
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned e) const
{
    LaurentPoly result(vars_, Rational(1));
    LaurentPoly base(*this);
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly LaurentPoly::adams(int r) const
{
    if (r <= 0) {
        throw input_error("Adams operation index must be positive, got " + std::to_string(r));
    }
    term_map out;
    for (const auto &[m, c] : terms_) {
        Monomial mr = m;
        for (auto &e : mr.exponents) {
            e *= r;
        }
        out.emplace(std::move(mr), c);
    }
    return LaurentPoly(vars_, std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::unit_inverse() const
{
    if (!is_unit_monomial()) {
        return std::nullopt;
    }
    const auto &[m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto &e : inv.exponents) {
        e = -e;
    }
    term_map t;
    t.emplace(std::move(inv), Rational(1) / c);
    return LaurentPoly(vars_, std::move(t));
}

namespace {

LaurentPoly power_of_value(const LaurentPoly::Value &v, int e, const VariableSet &target, const std::string &name)
{
    if (const auto *q = std::get_if<Rational>(&v)) {
        if (e < 0 && is_zero(*q)) {
            throw input_error("zero assigned to variable '" + name + "' which occurs with a negative exponent");
        }
        mpz_class num = q->get_num(), den = q->get_den();
        unsigned ae = static_cast<unsigned>(e < 0 ? -e : e);
        mpz_class pn, pd;
        mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ae);
        mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ae);
        Rational val = e < 0 ? make_rational(pd, pn) : make_rational(pn, pd);
        return LaurentPoly(target, val);
    }
    LaurentPoly p = std::get<LaurentPoly>(v);
    if (p.variables().empty() && !target.empty()) {
        p = LaurentPoly(target, p.constant_value());
    }
    if (!(p.variables() == target)) {
        throw input_error("value substituted for '" + name + "' must be over the remaining variables ("
                          + target.to_string() + ")");
    }
    if (e >= 0) {
        return p.pow(static_cast<unsigned>(e));
    }
    auto inv = p.unit_inverse();
    if (!inv) {
        throw input_error("value substituted for '" + name
                          + "' is not invertible but the variable occurs with a negative exponent");
    }
    return inv->pow(static_cast<unsigned>(-e));
}

} // namespace

LaurentPoly LaurentPoly::specialize(const std::map<std::string, Value> &assignment) const
{
    if (assignment.empty()) {
        return *this;
    }
    for (const auto &[name, v] : assignment) {
        if (!vars_.index_of(name)) {
            throw input_error("cannot specialize unknown variable '" + name + "'");
        }
    }
    std::vector<std::string> remaining_names;
    std::vector<std::size_t> kept;
    std::vector<std::pair<std::size_t, const Value *>> assigned;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end()) {
            remaining_names.push_back(vars_[i]);
            kept.push_back(i);
        } else {
            assigned.emplace_back(i, &it->second);
        }
    }
    VariableSet remaining(std::move(remaining_names));
    LaurentPoly result(remaining);
    for (const auto &[m, c] : terms_) {
        Monomial rest{std::vector<int>(kept.size())};
        for (std::size_t j = 0; j < kept.size(); ++j) {
            rest.exponents[j] = m.exponents[kept[j]];
        }
        LaurentPoly term = LaurentPoly::monomial(remaining, rest.exponents, c);
        for (const auto &[idx, val] : assigned) {
            const int e = m.exponents[idx];
            if (e != 0) {
                term *= power_of_value(*val, e, remaining, vars_[idx]);
            }
        }
        result += term;
    }
    return result;
}

std::string monomial_to_string(const VariableSet &vars, const Monomial &m)
{
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const int e = m.exponents[i];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += vars[i];
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += monomial_to_string(vars_, m);
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

} // namespace symgen
