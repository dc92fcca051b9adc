#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "symgen/error.hpp"
#include "symgen/genera.hpp"
#include "symgen/graded_spaces.hpp"
#include "symgen/io.hpp"
#include "symgen/prelambda.hpp"
#include "symgen/sym_group.hpp"

namespace symgen::cli {

namespace {

struct Options {
    int order = -1;
    bool json = false;
    bool csv = false;
    std::string profile_path;
    std::string kind;
    std::string poly;
    std::string name = "input";
    std::string vars = "yxz";
    bool compact_support = false;
    std::optional<long long> sigma;
    std::optional<long long> chi;
    int n = -1;
    std::string dims_path;
    int max_n = 4;
    int characters_n = 0;
};

enum class OutputFormat { text, json, csv };

struct Inputs {
    std::vector<GenusProfile> profiles;
    int order = default_order;
};

OutputFormat format_of(const Options &o)
{
    if (o.json && o.csv) {
        throw input_error("--json and --csv are mutually exclusive");
    }
    return o.json ? OutputFormat::json : (o.csv ? OutputFormat::csv : OutputFormat::text);
}

Inputs gather_profiles(const Options &o)
{
    Inputs in;
    if (!o.profile_path.empty()) {
        auto file = load_profile_file(o.profile_path);
        in.profiles = std::move(file.profiles);
        in.order = file.order;
    } else if (!o.kind.empty()) {
        const GenusKind kind = parse_genus_kind(o.kind);
        GenusProfile p;
        if (kind == GenusKind::euler) {
            if (!o.chi) {
                throw input_error("an euler profile needs --chi");
            }
            p = GenusProfile::euler(o.name, Integer(std::to_string(*o.chi)));
        } else if (kind == GenusKind::signature) {
            if (!o.sigma || !o.chi) {
                throw input_error("a signature profile needs --sigma and --chi");
            }
            p = GenusProfile::signature(o.name, Integer(std::to_string(*o.sigma)), Integer(std::to_string(*o.chi)));
        } else {
            if (o.poly.empty()) {
                throw input_error("a " + o.kind + " profile needs --poly");
            }
            p = GenusProfile::polynomial(o.name, kind, parse_poly(o.poly, variables_for(kind)), o.compact_support);
        }
        p.compact_support = o.compact_support;
        in.profiles.push_back(std::move(p));
    } else {
        throw input_error("no input: pass --profile FILE or --kind KIND with --poly/--chi/--sigma");
    }
    if (o.order >= 0) {
        in.order = o.order;
    }
    return in;
}

struct NamedSeries {
    std::string name;
    std::string kind;
    PolySeries series;
};

// Profiles are independent, so they are evaluated concurrently; results keep input order.
std::vector<NamedSeries> compute_all(const Inputs &in, const std::function<PolySeries(const GenusProfile &, int)> &fn)
{
    std::vector<std::future<PolySeries>> jobs;
    jobs.reserve(in.profiles.size());
    for (const auto &p : in.profiles) {
        jobs.push_back(std::async(std::launch::async, [&fn, &p, order = in.order] { return fn(p, order); }));
    }
    std::vector<NamedSeries> out;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto &p = in.profiles[i];
        out.push_back({p.name, std::string(to_string(p.kind)), jobs[i].get()});
    }
    return out;
}

void emit(const std::vector<NamedSeries> &all, OutputFormat fmt, std::ostream &out)
{
    switch (fmt) {
    case OutputFormat::json: {
        auto arr = nlohmann::json::array();
        for (const auto &s : all) {
            arr.push_back(series_to_json(s.name, s.kind, s.series));
        }
        out << nlohmann::json{{"series", arr}}.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "name,n,monomial,coefficient\n";
        for (const auto &s : all) {
            out << series_to_csv_rows(s.name, s.series);
        }
        break;
    case OutputFormat::text:
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (i) {
                out << '\n';
            }
            out << series_to_text(all[i].name, all[i].kind, all[i].series);
        }
        break;
    }
}

RationalSeries signature_of_profile(const GenusProfile &p, int order)
{
    switch (p.kind) {
    case GenusKind::signature: {
        const auto &s = std::get<SignatureData>(p.data);
        return signature_series(s.sigma, s.chi, order);
    }
    case GenusKind::chi_y:
        return signature_series(p, order);
    case GenusKind::hodge:
        return signature_series(specialization_bridge(p).chi_y_profile(p.name), order);
    default:
        throw input_error("no signature series for the " + std::string(to_string(p.kind)) + " profile '" + p.name
                          + "'");
    }
}

int cmd_signature(const Options &o, std::ostream &out)
{
    std::vector<NamedSeries> all;
    if (o.sigma && o.chi && o.profile_path.empty() && o.kind.empty()) {
        const int order = o.order >= 0 ? o.order : default_order;
        const Integer sigma(std::to_string(*o.sigma)), chi(std::to_string(*o.chi));
        all.push_back({"sigma=" + sigma.get_str() + ",chi=" + chi.get_str(), "signature",
                       lift_scalar_series(signature_series(sigma, chi, order))});
    } else {
        const Inputs in = gather_profiles(o);
        all = compute_all(in, [](const GenusProfile &p, int order) {
            return lift_scalar_series(signature_of_profile(p, order));
        });
        for (auto &s : all) {
            s.kind = "signature";
        }
    }
    emit(all, format_of(o), out);
    return exit_ok;
}

int cmd_invariant(const Options &o, std::ostream &out)
{
    if (o.n < 0) {
        throw input_error("invariant needs --n N with N >= 0");
    }
    const Inputs in = gather_profiles(o);
    const OutputFormat fmt = format_of(o);
    auto arr = nlohmann::json::array();
    if (fmt == OutputFormat::csv) {
        out << "name,n,monomial,coefficient\n";
    }
    for (const auto &p : in.profiles) {
        const LaurentPoly value = invariant_of_symmetric_product(p, o.n);
        switch (fmt) {
        case OutputFormat::json:
            arr.push_back({{"name", p.name}, {"kind", std::string(to_string(p.kind))}, {"n", o.n},
                           {"invariant", value.to_string()}});
            break;
        case OutputFormat::csv:
            for (const auto &[m, c] : value.terms()) {
                out << p.name << ',' << o.n << ',' << monomial_to_string(value.variables(), m) << ',' << c.get_str()
                    << '\n';
            }
            break;
        case OutputFormat::text:
            out << p.name << " (" << to_string(p.kind) << "), n = " << o.n << ": " << value << '\n';
            break;
        }
    }
    if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"invariants", arr}}.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_specialize(const Options &o, std::ostream &out)
{
    const Inputs in = gather_profiles(o);
    const OutputFormat fmt = format_of(o);
    if (fmt == OutputFormat::csv) {
        throw input_error("specialize has no CSV form");
    }
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < in.profiles.size(); ++i) {
        const auto &p = in.profiles[i];
        const auto s = specialization_bridge(p);
        const std::string arith = s.arithmetic_genus ? s.arithmetic_genus->get_str() : "undefined";
        const std::string sig = s.signature ? s.signature->sigma.get_str() : "undefined";
        if (fmt == OutputFormat::json) {
            arr.push_back({{"name", p.name},
                           {"hodge", p.as_poly().to_string()},
                           {"e", s.e.to_string()},
                           {"chi_y", s.chi_y.to_string()},
                           {"betti", s.betti.to_string()},
                           {"euler", s.euler.get_str()},
                           {"arithmetic_genus", arith},
                           {"signature", sig}});
            continue;
        }
        if (i) {
            out << '\n';
        }
        out << "# " << p.name << " (hodge) " << p.as_poly() << '\n'
            << "e                 " << s.e << '\n'
            << "chi_y             " << s.chi_y << '\n'
            << "betti             " << s.betti << '\n'
            << "euler             " << s.euler.get_str() << '\n'
            << "arithmetic_genus  " << arith << '\n'
            << "signature         " << sig << '\n';
    }
    if (fmt == OutputFormat::json) {
        out << nlohmann::json{{"specializations", arr}}.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_oracle_check(const Options &o, std::ostream &out)
{
    if (o.dims_path.empty()) {
        throw input_error("oracle-check needs --dims FILE");
    }
    if (o.max_n < 0) {
        throw input_error("--max-n must be >= 0");
    }
    std::ifstream in(o.dims_path);
    if (!in) {
        throw input_error("cannot open graded dimensions file '" + o.dims_path + "'");
    }
    GradedDims v;
    try {
        v = graded_dims_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception &e) {
        throw input_error("malformed JSON in '" + o.dims_path + "': " + e.what());
    }
    const LaurentPoly h = hodge_poly(v);
    const auto sigma = sigma_series(h, o.max_n);
    const auto lambda = lambda_series(h, o.max_n);
    int checks = 0, failures = 0;
    auto compare = [&](const char *label, int n, const GradedDims &brute, const LaurentPoly &coefficient) {
        const auto predicted = dims_from_hodge_poly(coefficient);
        std::set<Tridegree> support;
        for (const auto &[d, _] : brute.entries()) {
            support.insert(d);
        }
        for (const auto &[d, _] : predicted.entries()) {
            support.insert(d);
        }
        if (support.empty()) {
            ++checks;
            out << label << " n=" << n << " zero space brute=0 series=0 PASS\n";
            return;
        }
        for (const auto &d : support) {
            ++checks;
            const bool ok = brute.at(d) == predicted.at(d);
            failures += ok ? 0 : 1;
            out << label << " n=" << n << ' ' << d.to_string() << " brute=" << brute.at(d)
                << " series=" << predicted.at(d) << (ok ? " PASS" : " FAIL") << '\n';
        }
    };
    for (int n = 0; n <= o.max_n; ++n) {
        compare("sym", n, sym_power_brute(v, n), sigma[static_cast<std::size_t>(n)]);
        compare("alt", n, alt_power_brute(v, n), lambda[static_cast<std::size_t>(n)]);
    }
    out << "oracle-check: " << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? exit_ok : exit_consistency_error;
}

int cmd_adams(const Options &o, std::ostream &out)
{
    if (o.poly.empty()) {
        throw input_error("adams needs --poly EXPR");
    }
    const VariableSet vars = VariableSet::from_letters(o.vars);
    const LaurentPoly p = parse_poly(o.poly, vars);
    const int order = o.order >= 0 ? o.order : default_order;
    const auto psi = adams_sequence(p, order);
    if (p.has_integer_coefficients()) {
        const auto s = sigma_series(p, order);
        if (adams_from_sigma(s) != psi || adams_from_sigma_newton(s) != psi) {
            throw consistency_error("Adams operations extracted from sigma_t disagree with the substitution");
        }
    }
    const OutputFormat fmt = format_of(o);
    if (fmt == OutputFormat::json) {
        auto arr = nlohmann::json::array();
        for (const auto &q : psi) {
            arr.push_back(q.to_string());
        }
        out << nlohmann::json{{"poly", p.to_string()}, {"vars", vars.names()}, {"adams", arr}}.dump(2) << '\n';
    } else if (fmt == OutputFormat::csv) {
        out << "r,monomial,coefficient\n";
        for (std::size_t r = 0; r < psi.size(); ++r) {
            for (const auto &[m, c] : psi[r].terms()) {
                out << r + 1 << ',' << monomial_to_string(vars, m) << ',' << c.get_str() << '\n';
            }
        }
    } else {
        out << "# Adams operations of " << p << '\n';
        const int width = static_cast<int>(std::to_string(order).size());
        out << std::left << std::setw(width) << "r" << "  Psi_r\n" << std::right;
        for (std::size_t r = 0; r < psi.size(); ++r) {
            out << std::setw(width) << r + 1 << "  " << psi[r] << '\n';
        }
    }
    return exit_ok;
}

int cmd_characters(const Options &o, std::ostream &out)
{
    if (o.characters_n < 0) {
        throw input_error("characters needs n >= 0");
    }
    const auto table = character_table(o.characters_n);
    // Columns start from the identity class.
    std::vector<std::size_t> cols(table.classes.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cols[j] = cols.size() - 1 - j;
    }
    const OutputFormat fmt = format_of(o);
    if (fmt == OutputFormat::json) {
        auto classes = nlohmann::json::array();
        for (auto j : cols) {
            classes.push_back(table.classes[j].to_string());
        }
        auto rows = nlohmann::json::array();
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            auto vals = nlohmann::json::array();
            for (auto j : cols) {
                vals.push_back(table.values[i][j]);
            }
            rows.push_back({{"lambda", table.classes[i].to_string()}, {"values", vals}});
        }
        out << nlohmann::json{{"n", table.n}, {"classes", classes}, {"rows", rows}}.dump(2) << '\n';
        return exit_ok;
    }
    if (fmt == OutputFormat::csv) {
        out << "lambda,mu,value\n";
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            for (auto j : cols) {
                out << '"' << table.classes[i].to_string() << "\",\"" << table.classes[j].to_string() << "\","
                    << table.values[i][j] << '\n';
            }
        }
        return exit_ok;
    }
    std::size_t label_width = 6; // "lambda"
    for (const auto &c : table.classes) {
        label_width = std::max(label_width, c.to_string().size());
    }
    std::vector<std::size_t> widths;
    for (auto j : cols) {
        std::size_t w = table.classes[j].to_string().size();
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            w = std::max(w, std::to_string(table.values[i][j]).size());
        }
        widths.push_back(w);
    }
    out << "# character table of S_" << table.n << " (rows: lambda, columns: cycle type)\n";
    out << std::left << std::setw(static_cast<int>(label_width)) << "lambda" << std::right;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out << "  " << std::setw(static_cast<int>(widths[c])) << table.classes[cols[c]].to_string();
    }
    out << '\n';
    for (std::size_t i = 0; i < table.classes.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(label_width)) << table.classes[i].to_string() << std::right;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out << "  " << std::setw(static_cast<int>(widths[c])) << table.values[i][cols[c]];
        }
        out << '\n';
    }
    return exit_ok;
}

void add_output_flags(CLI::App *sub, Options &o)
{
    sub->add_option("--order", o.order, "Truncation order N (default 10)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
    sub->add_flag("--csv", o.csv, "Flattened CSV output");
}

void add_profile_flags(CLI::App *sub, Options &o)
{
    sub->add_option("--profile", o.profile_path, "Profile file (JSON)");
    sub->add_option("--kind", o.kind, "Invariant kind: hodge, e, chi_y, betti, euler, signature");
    sub->add_option("--poly", o.poly, "Polynomial data, e.g. \"1 + y*x*z^2\"");
    sub->add_option("--name", o.name, "Name for an inline profile");
    sub->add_option("--sigma", o.sigma, "Signature (signature kind)");
    sub->add_option("--chi", o.chi, "Euler characteristic (euler and signature kinds)");
    sub->add_flag("--compact-support", o.compact_support, "Label the data as compactly supported");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Generating series for genera of symmetric products and configuration spaces", "symgen"};
    app.require_subcommand(1);

    auto *series = app.add_subcommand("series", "Generating series over symmetric products");
    add_profile_flags(series, o);
    add_output_flags(series, o);

    auto *config = app.add_subcommand("config-series", "Generating series over configuration spaces");
    add_profile_flags(config, o);
    add_output_flags(config, o);

    auto *signature = app.add_subcommand("signature", "Signature generating series");
    add_profile_flags(signature, o);
    add_output_flags(signature, o);

    auto *invariant = app.add_subcommand("invariant", "Invariant of the n-th symmetric product");
    add_profile_flags(invariant, o);
    add_output_flags(invariant, o);
    invariant->add_option("--n", o.n, "Symmetric power")->required();

    auto *specialize = app.add_subcommand("specialize", "Derived invariants of a hodge profile");
    add_profile_flags(specialize, o);
    add_output_flags(specialize, o);

    auto *oracle = app.add_subcommand("oracle-check", "Brute-force symmetric/alternating powers vs the series");
    oracle->add_option("--dims", o.dims_path, "Graded dimensions file (JSON list of {p,q,k,dim})")->required();
    oracle->add_option("--max-n", o.max_n, "Largest power to check (default 4)");

    auto *adams = app.add_subcommand("adams", "Adams operations Psi_1..Psi_N of a polynomial");
    adams->add_option("--poly", o.poly, "Polynomial expression")->required();
    adams->add_option("--vars", o.vars, "Variables, one letter each (default yxz)");
    add_output_flags(adams, o);

    auto *characters = app.add_subcommand("characters", "Character table of the symmetric group S_n");
    characters->add_option("n", o.characters_n, "n")->required();
    characters->add_flag("--json", o.json, "JSON output");
    characters->add_flag("--csv", o.csv, "CSV output");

    std::vector<const char *> argv{"symgen"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    try {
        if (*series) {
            emit(compute_all(gather_profiles(o), symmetric_series), format_of(o), out);
        } else if (*config) {
            emit(compute_all(gather_profiles(o), configuration_series), format_of(o), out);
        } else if (*signature) {
            return cmd_signature(o, out);
        } else if (*invariant) {
            return cmd_invariant(o, out);
        } else if (*specialize) {
            return cmd_specialize(o, out);
        } else if (*oracle) {
            return cmd_oracle_check(o, out);
        } else if (*adams) {
            return cmd_adams(o, out);
        } else if (*characters) {
            return cmd_characters(o, out);
        }
        return exit_ok;
    } catch (const input_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const consistency_error &e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return exit_consistency_error;
    }
}

} // namespace symgen::cli
