#include "symgen/io.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "symgen/error.hpp"

namespace symgen {

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const VariableSet &vars) : text_(text), vars_(vars) {}

    LaurentPoly parse()
    {
        LaurentPoly p = expression();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw input_error("parse error at column " + std::to_string(pos_ + 1) + ": " + msg + " in \""
                          + std::string(text_) + "\"");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPoly expression()
    {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        LaurentPoly acc = term();
        if (negate) {
            acc = -acc;
        }
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly term()
    {
        LaurentPoly acc = factor();
        while (accept('*')) {
            acc *= factor();
        }
        return acc;
    }

    Integer digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    LaurentPoly factor()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            Integer den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                den = digits();
                if (den == 0) {
                    fail("division by zero");
                }
            }
            return LaurentPoly(vars_, make_rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (!vars_.index_of(name)) {
                pos_ = start;
                fail("unknown variable '" + name + "' (variables: " + vars_.to_string() + ")");
            }
            int exponent = 1;
            if (accept('^')) {
                skip_ws();
                bool negative = false;
                if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                    negative = text_[pos_] == '-';
                    ++pos_;
                }
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    fail("malformed exponent");
                }
                const Integer e = digits();
                if (!e.fits_sint_p()) {
                    fail("exponent out of range");
                }
                exponent = static_cast<int>(e.get_si());
                if (negative) {
                    exponent = -exponent;
                }
            }
            return LaurentPoly::variable(vars_, name, exponent);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const VariableSet &vars_;
    std::size_t pos_ = 0;
};

Integer json_integer(const nlohmann::json &j, const std::string &what)
{
    if (j.is_number_integer()) {
        return Integer(std::to_string(j.get<long long>()));
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument &) {
        }
    }
    throw input_error(what + " must be an integer");
}

int json_int(const nlohmann::json &j, const char *key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw input_error(std::string("graded dimension record needs integer field '") + key + "'");
    }
    return j.at(key).get<int>();
}

} // namespace

LaurentPoly parse_poly(std::string_view text, const VariableSet &vars) { return PolyParser(text, vars).parse(); }

GradedDims graded_dims_from_json(const nlohmann::json &j)
{
    if (!j.is_array()) {
        throw input_error("graded dimensions must be a JSON list of {p, q, k, dim} records");
    }
    GradedDims v;
    for (const auto &rec : j) {
        if (!rec.is_object()) {
            throw input_error("graded dimension record must be an object");
        }
        const Tridegree d{json_int(rec, "p"), json_int(rec, "q"), json_int(rec, "k")};
        v.add(d, json_int(rec, "dim"));
    }
    return v;
}

namespace {

template <class Dims>
nlohmann::json dims_to_json(const Dims &v)
{
    auto out = nlohmann::json::array();
    for (const auto &[d, n] : v.entries()) {
        out.push_back({{"p", d.p}, {"q", d.q}, {"k", d.k}, {"dim", n}});
    }
    return out;
}

} // namespace

nlohmann::json graded_dims_to_json(const GradedDims &v) { return dims_to_json(v); }
nlohmann::json graded_dims_to_json(const VirtualGradedDims &v) { return dims_to_json(v); }

ProfileFile profile_file_from_json(const nlohmann::json &j)
{
    if (!j.is_object() || !j.contains("profiles") || !j.at("profiles").is_array()) {
        throw input_error("profile file must be an object with a \"profiles\" list");
    }
    ProfileFile file;
    if (j.contains("order")) {
        if (!j.at("order").is_number_integer() || j.at("order").get<long long>() < 0) {
            throw input_error("\"order\" must be a nonnegative integer");
        }
        file.order = j.at("order").get<int>();
    }
    for (const auto &rec : j.at("profiles")) {
        if (!rec.is_object() || !rec.contains("kind") || !rec.at("kind").is_string()) {
            throw input_error("each profile needs a string \"kind\"");
        }
        const std::string name = rec.value("name", std::string("unnamed"));
        const GenusKind kind = parse_genus_kind(rec.at("kind").get<std::string>());
        const bool compact = rec.value("compact_support", false);
        GenusProfile p;
        switch (kind) {
        case GenusKind::euler: {
            const auto &v = rec.contains("chi") ? rec.at("chi") : rec.value("poly", nlohmann::json());
            p = GenusProfile::euler(name, json_integer(v, "profile '" + name + "': chi"));
            break;
        }
        case GenusKind::signature:
            if (!rec.contains("sigma") || !rec.contains("chi")) {
                throw input_error("signature profile '" + name + "' needs \"sigma\" and \"chi\"");
            }
            p = GenusProfile::signature(name, json_integer(rec.at("sigma"), "sigma"), json_integer(rec.at("chi"), "chi"));
            break;
        default:
            if (!rec.contains("poly") || !rec.at("poly").is_string()) {
                throw input_error("profile '" + name + "' needs a \"poly\" expression");
            }
            p = GenusProfile{name, kind, parse_poly(rec.at("poly").get<std::string>(), variables_for(kind)), compact};
            break;
        }
        p.compact_support = compact;
        p.validate();
        file.profiles.push_back(std::move(p));
    }
    return file;
}

ProfileFile load_profile_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open profile file '" + path + "'");
    }
    try {
        return profile_file_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception &e) {
        throw input_error("malformed JSON in '" + path + "': " + e.what());
    }
}

nlohmann::json profile_to_json(const GenusProfile &p)
{
    nlohmann::json j{{"name", p.name}, {"kind", std::string(to_string(p.kind))}, {"compact_support", p.compact_support}};
    if (const auto *poly = std::get_if<LaurentPoly>(&p.data)) {
        j["poly"] = poly->to_string();
    } else if (const auto *chi = std::get_if<Integer>(&p.data)) {
        j["chi"] = chi->get_str();
    } else {
        const auto &s = std::get<SignatureData>(p.data);
        j["sigma"] = s.sigma.get_str();
        j["chi"] = s.chi.get_str();
    }
    return j;
}

nlohmann::json series_to_json(const std::string &name, std::string_view kind, const PolySeries &s)
{
    auto coeffs = nlohmann::json::array();
    for (const auto &c : s.coefficients()) {
        coeffs.push_back(c.to_string());
    }
    return {{"name", name},
            {"kind", std::string(kind)},
            {"vars", s[0].variables().names()},
            {"order", s.order()},
            {"coefficients", coeffs}};
}

PolySeries series_from_json(const nlohmann::json &j)
{
    try {
        const VariableSet vars(j.at("vars").get<std::vector<std::string>>());
        std::vector<LaurentPoly> coeffs;
        for (const auto &c : j.at("coefficients")) {
            coeffs.push_back(parse_poly(c.get<std::string>(), vars));
        }
        PolySeries s(std::move(coeffs));
        if (j.contains("order") && j.at("order").get<int>() != s.order()) {
            throw input_error("series \"order\" does not match the number of coefficients");
        }
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw input_error(std::string("malformed series JSON: ") + e.what());
    }
}

std::string series_to_text(const std::string &name, std::string_view kind, const PolySeries &s)
{
    std::ostringstream out;
    out << "# " << name << " (" << kind << ")\n";
    const int width = static_cast<int>(std::to_string(s.order()).size());
    out << std::left << std::setw(width) << "n" << "  coefficient\n";
    for (std::size_t n = 0; n < s.coefficients().size(); ++n) {
        out << std::right << std::setw(width) << n << "  " << s[n].to_string() << '\n';
    }
    return out.str();
}

std::string series_to_csv_rows(const std::string &name, const PolySeries &s)
{
    std::ostringstream out;
    for (std::size_t n = 0; n < s.coefficients().size(); ++n) {
        for (const auto &[m, c] : s[n].terms()) {
            out << name << ',' << n << ',' << monomial_to_string(s[n].variables(), m) << ',' << c.get_str() << '\n';
        }
    }
    return out.str();
}

} // namespace symgen
