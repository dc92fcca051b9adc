// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "reference_tables.hpp"
#include "symgen/error.hpp"
#include "symgen/genera.hpp"
#include "symgen/graded_spaces.hpp"
#include "symgen/io.hpp"
#include "symgen/prelambda.hpp"
#include "symgen/sym_group.hpp"

using namespace symgen;
using namespace symgen::testing;

namespace {

using V = LaurentPoly::Value;

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure only; later checks keep running so counts stay meaningful.
class Checker {
public:
    void expect(bool cond, const std::string &what)
    {
        ++checks_;
        if (!cond) {
            ++failures_;
            if (first_.empty()) {
                first_ = what;
            }
        }
    }

    Outcome outcome(const std::string &summary) const
    {
        std::ostringstream s;
        s << summary << "; " << checks_ << " checks";
        if (failures_ != 0) {
            s << ", " << failures_ << " failed, first: " << first_;
        }
        return {failures_ == 0, s.str()};
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string first_;
};

LaurentPoly H(const std::string &s) { return parse_poly(s, hodge_variables()); }

GenusProfile hodge_profile(const std::string &name, const LaurentPoly &p)
{
    return GenusProfile::polynomial(name, GenusKind::hodge, p);
}

std::vector<GradedDims> random_dims_corpus()
{
    Gen g(20240601);
    std::vector<GradedDims> out;
    for (int i = 0; i < 200; ++i) {
        out.push_back(g.graded_dims(i < 8 ? 0 : 1, 4));
    }
    return out;
}

std::vector<LaurentPoly> random_poly_corpus()
{
    Gen g(20240602);
    std::vector<LaurentPoly> out;
    for (int i = 0; i < 100; ++i) {
        out.push_back(g.nonzero_laurent(hodge_variables(), 5, -2, 2, 3));
    }
    return out;
}

std::vector<GenusProfile> bundled_profiles()
{
    return load_profile_file(std::string(SYMGEN_DATA_DIR) + "/profiles.json").profiles;
}

constexpr int series_order = 10;

Outcome oracle_equivalence()
{
    Checker c;
    const auto corpus = random_dims_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto &v = corpus[i];
        const auto h = hodge_poly(v);
        const auto prof = hodge_profile("V" + std::to_string(i), h);
        const auto sym = symmetric_series(prof, 4);
        const auto alt = configuration_series(prof, 4);
        const auto sigma = sigma_series(h, 4);
        const auto lambda = lambda_series(h, 4);
        for (int n = 0; n <= 4; ++n) {
            const auto k = static_cast<std::size_t>(n);
            const auto sym_brute = hodge_poly(sym_power_brute(v, n));
            const auto alt_brute = hodge_poly(alt_power_brute(v, n));
            const std::string where = "space " + std::to_string(i) + " n=" + std::to_string(n);
            c.expect(sym[k] == sym_brute, where + " symmetric series vs brute force");
            c.expect(sigma[k] == sym_brute, where + " sigma_t vs brute force");
            c.expect(alt[k] == alt_brute, where + " configuration series vs brute force");
            c.expect(lambda[k] == alt_brute, where + " lambda_t vs brute force");
        }
    }
    return c.outcome(std::to_string(corpus.size()) + " random spaces of dim <= 4, n <= 4, sym and alt");
}

Outcome exp_identity()
{
    Checker c;
    const auto corpus = random_poly_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto &p = corpus[i];
        const auto product = sigma_series(p, series_order);
        const auto exp_form = sigma_from_adams(adams_sequence(p, series_order), series_order, zero_like(p));
        c.expect(product == exp_form, "polynomial " + p.to_string());
    }
    return c.outcome(std::to_string(corpus.size()) + " random Laurent polynomials, N = 10");
}

Outcome opposite_structure()
{
    Checker c;
    for (const auto &p : random_poly_corpus()) {
        const auto prod = lambda_series(p, series_order) * sigma_series(p, series_order).negate_variable();
        c.expect(prod == PolySeries::one(p, series_order), "polynomial " + p.to_string());
    }
    return c.outcome("lambda_t * sigma_{-t} = 1 mod t^11");
}

Outcome adams_substitution()
{
    Checker c;
    for (const auto &p : random_poly_corpus()) {
        const auto s = sigma_series(p, series_order);
        const auto via_log = adams_from_sigma(s);
        const auto via_newton = adams_from_sigma_newton(s);
        for (int r = 1; r <= series_order; ++r) {
            const auto k = static_cast<std::size_t>(r - 1);
            c.expect(via_log[k] == p.adams(r), "log route r=" + std::to_string(r) + " on " + p.to_string());
            c.expect(via_newton[k] == p.adams(r), "Newton route r=" + std::to_string(r) + " on " + p.to_string());
        }
    }
    return c.outcome("log and Newton extraction, r <= 10");
}

Outcome classical_identities()
{
    Checker c;
    const auto p1 = symmetric_series(hodge_profile("P1", H("1 + y*x*z^2")), 6);
    for (int n = 0; n <= 6; ++n) {
        LaurentPoly expected(hodge_variables());
        for (int i = 0; i <= n; ++i) {
            expected += H("y*x*z^2").pow(static_cast<unsigned>(i));
        }
        c.expect(p1[static_cast<std::size_t>(n)] == expected, "Sym^" + std::to_string(n) + " P1");
    }

    const auto ell = symmetric_series(hodge_profile("E", H("1 - y*z - x*z + y*x*z^2")), 2);
    c.expect(ell[2] == H("1 - y*z - x*z + 2*y*x*z^2 - y^2*x*z^3 - y*x^2*z^3 + y^2*x^2*z^4"), "Sym^2 E Hodge polynomial");
    const auto betti = ell[2].specialize({{"y", V(Rational(1))}, {"x", V(Rational(1))}});
    const int expected_betti[] = {1, 2, 2, 2, 1};
    for (int k = 0; k <= 4; ++k) {
        const Rational b = betti.coefficient(Monomial{{k}});
        c.expect(abs(b) == expected_betti[k], "Sym^2 E b_" + std::to_string(k));
    }
    GradedDims e_dims;
    e_dims.add({0, 0, 0}, 1);
    e_dims.add({1, 0, 1}, 1);
    e_dims.add({0, 1, 1}, 1);
    e_dims.add({1, 1, 2}, 1);
    c.expect(hodge_poly(sym_power_brute(e_dims, 2)) == ell[2], "Sym^2 E brute force");

    const auto euler = symmetric_series(GenusProfile::euler("chi=2", Integer(2)), series_order);
    for (int n = 0; n <= series_order; ++n) {
        c.expect(euler[static_cast<std::size_t>(n)].constant_value() == n + 1, "Euler series t^" + std::to_string(n));
    }
    return c.outcome("Sym^n P1 (n <= 6), Sym^2 E, Euler series chi = 2");
}

Outcome zagier_cross_check()
{
    Checker c;
    std::vector<GenusProfile> corpus = bundled_profiles();
    const auto spaces = random_dims_corpus();
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        corpus.push_back(hodge_profile("V" + std::to_string(i), hodge_poly(spaces[i])));
    }
    int compared = 0;
    for (const auto &prof : corpus) {
        const auto bridge = specialization_bridge(prof);
        if (!bridge.signature) {
            continue;
        }
        ++compared;
        const auto sig = signature_series(bridge.signature->sigma, bridge.signature->chi, series_order);
        const auto chi_y = symmetric_series(bridge.chi_y_profile(prof.name), series_order);
        const auto at_minus_one = specialize_series(chi_y, {{"y", V(Rational(-1))}});
        for (int n = 0; n <= series_order; ++n) {
            const auto k = static_cast<std::size_t>(n);
            c.expect(at_minus_one[k].constant_value() == sig[k], prof.name + " t^" + std::to_string(n));
        }
    }
    const auto p2 = signature_series(Integer(1), Integer(3), 4);
    const int expected[] = {1, 1, 2, 2, 3};
    for (std::size_t n = 0; n < 5; ++n) {
        c.expect(p2[n] == expected[n], "(1,3) coefficient " + std::to_string(n));
    }
    return c.outcome(std::to_string(compared) + " profiles with matching parity, N = 10; (1,3) -> 1,1,2,2,3");
}

Outcome character_suite()
{
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= 7; ++n) {
        const auto t = character_table(n);
        const std::size_t k = t.classes.size();
        Integer dim_squares = 0;
        // The identity class is the last column.
        for (std::size_t a = 0; a < k; ++a) {
            dim_squares += Integer(t.values[a][k - 1]) * t.values[a][k - 1];
        }
        c.expect(dim_squares == factorial(n), "sum of squared dimensions for n=" + std::to_string(n));
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = 0; b < k; ++b) {
                Integer rows = 0;
                Integer cols = 0;
                for (std::size_t j = 0; j < k; ++j) {
                    rows += class_size(t.classes[j]) * t.values[a][j] * t.values[b][j];
                    cols += Integer(t.values[j][a]) * t.values[j][b];
                }
                c.expect(rows == (a == b ? factorial(n) : Integer(0)), "row orthogonality n=" + std::to_string(n));
                c.expect(cols == (a == b ? centralizer_order(t.classes[a]) : Integer(0)),
                         "column orthogonality n=" + std::to_string(n));
            }
        }
        const auto &ref = reference::character_tables.at(static_cast<std::size_t>(n - 1));
        c.expect(t.values == ref.values, "reference table n=" + std::to_string(n));
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 10.0, "runtime under 10 s");
    std::ostringstream s;
    s.precision(3);
    s << "n <= 7, both orthogonality relations and sum of squares, " << secs << " s";
    return c.outcome(s.str());
}

// Every multiset of at most three basis vectors drawn from a fixed grid of tridegrees.
std::vector<GradedDims> all_small_spaces()
{
    std::vector<Tridegree> grid;
    for (int p : {0, 1}) {
        for (int q : {-1, 0}) {
            for (int k : {-1, 0, 1, 2}) {
                grid.push_back({p, q, k});
            }
        }
    }
    std::vector<GradedDims> out;
    std::function<void(std::size_t, int, GradedDims)> rec = [&](std::size_t from, int left, GradedDims v) {
        out.push_back(v);
        if (left == 0) {
            return;
        }
        for (std::size_t i = from; i < grid.size(); ++i) {
            GradedDims w = v;
            w.add(grid[i], 1);
            rec(i, left - 1, w);
        }
    };
    rec(0, 3, GradedDims{});
    return out;
}

Outcome power_operations()
{
    Checker c;
    const auto spaces = all_small_spaces();
    for (std::size_t i = 0; i < spaces.size(); ++i) {
        const auto &v = spaces[i];
        const auto h = hodge_poly(v);
        for (int n = 1; n <= 5; ++n) {
            const std::string where = "space " + std::to_string(i) + " n=" + std::to_string(n);
            c.expect(phi_power(v, make_functional(FunctionalKind::sigma, n)) == sym_power_brute(v, n).as_virtual(),
                     where + " sigma_n");
            c.expect(phi_power(v, make_functional(FunctionalKind::lambda, n)) == alt_power_brute(v, n).as_virtual(),
                     where + " lambda_n");
            c.expect(hodge_poly(phi_power(v, make_functional(FunctionalKind::psi, n))) == h.adams(n), where + " psi_n");
            VirtualGradedDims total;
            bool integral = true;
            for (const auto &lambda : partitions(n)) {
                try {
                    const auto m = schur_multiplicity(v, n, lambda);
                    const std::int64_t dim = mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
                    for (const auto &[d, mult] : m.entries()) {
                        total.add(d, dim * mult);
                    }
                } catch (const consistency_error &) {
                    integral = false;
                }
            }
            c.expect(integral, where + " multiplicities are nonnegative integers");
            c.expect(total == tensor_power(v, n).as_virtual(), where + " sum of dim * multiplicity");
        }
    }
    return c.outcome(std::to_string(spaces.size()) + " spaces of dim <= 3 on a 16-degree grid, n <= 5");
}

Outcome multiplicativity()
{
    Checker c;
    Gen g(20240609);
    for (int i = 0; i < 50; ++i) {
        const auto v = g.graded_dims(0, 4);
        const auto w = g.graded_dims(0, 4);
        const auto pv = hodge_profile("V", hodge_poly(v));
        const auto pw = hodge_profile("W", hodge_poly(w));
        const auto pvw = hodge_profile("V+W", hodge_poly(v + w));
        const std::string where = "pair " + std::to_string(i);
        c.expect(symmetric_series(pvw, 8) == symmetric_series(pv, 8) * symmetric_series(pw, 8), where + " symmetric");
        c.expect(configuration_series(pvw, 8) == configuration_series(pv, 8) * configuration_series(pw, 8),
                 where + " configuration");
    }
    return c.outcome("50 random pairs, order 8, symmetric and configuration series");
}

std::string run_cli(const std::vector<std::string> &args, int &code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

Outcome cli_golden()
{
    Checker c;
    const std::string profiles = std::string(SYMGEN_DATA_DIR) + "/profiles.json";
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"series_profiles", {"series", "--profile", profiles}},
        {"config_series_profiles", {"config-series", "--profile", profiles}},
        {"signature_profiles", {"signature", "--profile", profiles}},
        {"characters_3", {"characters", "3"}},
    };
    for (const auto &[name, args] : cases) {
        int code1 = -1, code2 = -1;
        const auto first = run_cli(args, code1);
        const auto second = run_cli(args, code2);
        c.expect(code1 == 0 && code2 == 0, name + " exit status");
        c.expect(first == second, name + " differs between runs");
        std::ifstream in(std::string(SYMGEN_GOLDEN_DIR) + "/" + name + ".txt", std::ios::binary);
        std::stringstream golden;
        golden << in.rdbuf();
        c.expect(in.good() || in.eof(), name + " golden file missing");
        c.expect(golden.str() == first, name + " differs from the golden file");
    }
    return c.outcome("series, config-series, signature, characters on the bundled profiles");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},
        {"exp identity", exp_identity},
        {"opposite structure", opposite_structure},
        {"Adams substitution", adams_substitution},
        {"classical identities", classical_identities},
        {"signature cross-check", zagier_cross_check},
        {"character tables", character_suite},
        {"power operations", power_operations},
        {"multiplicativity", multiplicativity},
        {"CLI golden files", cli_golden},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &[name, fn] = criteria[i];
        const auto start = std::chrono::steady_clock::now();
        Outcome r;
        try {
            r = fn();
        } catch (const std::exception &e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += r.ok ? 0 : 1;
        std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << name << "): " << r.detail;
        std::cout.precision(3);
        std::cout << " [" << secs << " s]" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
