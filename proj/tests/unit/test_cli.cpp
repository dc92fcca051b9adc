#include "doctest.h"

#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = symgen::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string profiles = std::string(SYMGEN_DATA_DIR) + "/profiles.json";
const std::string odd_line_dims = std::string(SYMGEN_DATA_DIR) + "/odd_line_dims.json";

} // namespace

TEST_CASE("series command")
{
    const auto r = run({"series", "--order", "2", "--kind", "hodge", "--poly", "1 + y*x*z^2", "--name", "P1"});
    CHECK(r.code == 0);
    CHECK(r.out == "# P1 (hodge)\nn  coefficient\n0  1\n1  1 + y*x*z^2\n2  1 + y*x*z^2 + y^2*x^2*z^4\n");
    const auto file = run({"series", "--profile", profiles, "--order", "2"});
    CHECK(file.code == 0);
    CHECK(file.out.find("2  1 + y*x*z^2 + y^2*x^2*z^4\n") != std::string::npos);
    // Output order follows the input file.
    CHECK(file.out.find("# P1") < file.out.find("# P2"));
    CHECK(file.out.find("# P2") < file.out.find("# elliptic curve"));
    CHECK(file.out.find("# affine line") < file.out.find("# odd line"));
}

TEST_CASE("json and csv output")
{
    const auto j = run({"series", "--json", "--order", "3", "--kind", "euler", "--chi", "2"});
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("series").at(0).at("coefficients") == nlohmann::json({"1", "2", "3", "4"}));
    const auto c = run({"config-series", "--csv", "--order", "2", "--kind", "e", "--poly", "y*x"});
    CHECK(c.code == 0);
    CHECK(c.out == "name,n,monomial,coefficient\ninput,0,1,1\ninput,1,y*x,1\n");
    CHECK(run({"series", "--json", "--csv", "--kind", "euler", "--chi", "1"}).code == 2);
}

TEST_CASE("signature, invariant, specialize and adams commands")
{
    const auto s = run({"signature", "--sigma", "1", "--chi", "3", "--order", "4", "--json"});
    REQUIRE(s.code == 0);
    CHECK(nlohmann::json::parse(s.out).at("series").at(0).at("coefficients")
          == nlohmann::json({"1", "1", "2", "2", "3"}));
    CHECK(run({"signature", "--sigma", "0", "--chi", "1"}).code == 2);

    const auto inv = run({"invariant", "--n", "3", "--kind", "hodge", "--poly", "1 + y*x*z^2", "--name", "P1"});
    CHECK(inv.code == 0);
    CHECK(inv.out == "P1 (hodge), n = 3: 1 + y*x*z^2 + y^2*x^2*z^4 + y^3*x^3*z^6\n");
    CHECK(run({"invariant", "--kind", "euler", "--chi", "2"}).code == 2);

    const auto sp = run({"specialize", "--kind", "hodge", "--poly", "1 + y*x*z^2", "--json"});
    REQUIRE(sp.code == 0);
    const auto spj = nlohmann::json::parse(sp.out);
    CHECK(spj.dump().find("\"euler\":\"2\"") != std::string::npos);

    const auto ad = run({"adams", "--poly", "y + 2*x^-1*z", "--order", "2"});
    CHECK(ad.code == 0);
    CHECK(ad.out.find("2  2*x^-2*z^2 + y^2\n") != std::string::npos);
    CHECK(run({"adams", "--poly", "y + w"}).code == 2);
}

TEST_CASE("characters command")
{
    const auto r = run({"characters", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(3)            1      1    1\n") != std::string::npos);
    CHECK(r.out.find("(2,1)          2      0   -1\n") != std::string::npos);
    CHECK(r.out.find("(1,1,1)        1     -1    1\n") != std::string::npos);
    CHECK(run({"characters", "-1"}).code == 2);
}

TEST_CASE("oracle-check command")
{
    const auto r = run({"oracle-check", "--dims", odd_line_dims, "--max-n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("0 failures") != std::string::npos);
    CHECK(run({"oracle-check", "--dims", "/nonexistent.json"}).code == 2);
}

TEST_CASE("errors map to exit codes")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"series"}).code == 2);
    const auto bad = run({"series", "--kind", "hodge", "--poly", "1 + q"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown variable") != std::string::npos);
    CHECK(run({"series", "--kind", "hodge", "--poly", "1 + x*z"}).code == 2);
    CHECK(run({"series", "--profile", "/nonexistent.json"}).code == 2);
    CHECK(run({"config-series", "--kind", "euler", "--chi", "2"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
