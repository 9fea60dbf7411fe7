#include <catch2/catch_amalgamated.hpp>

#include "landau/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int exit;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = landau::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

using landau::report::json;

TEST_CASE("radii emits a well-formed report", "[cli]") {
    const auto res = run_cli({"radii", "--theorem", "A", "--M", "2"});
    REQUIRE(res.exit == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["command"] == "radii");
    CHECK(doc["inputs"]["theorem"] == "A");
    CHECK(doc["status"] == "ok");
    CHECK(doc["tool_version"] == landau::report::kToolVersion);
    CHECK(doc["rho"].get<double>() > 0.0);
    CHECK(doc["sigma"].get<double>() > 0.0);
    CHECK(doc["residual"].get<double>() < 1e-10);
    CHECK(!doc["unconstrained"].get<bool>());
}

TEST_CASE("reports survive a parse/dump round trip byte for byte", "[cli]") {
    for (auto args : {std::vector<std::string>{"radii", "--theorem", "C212p", "--M", "3"},
                      std::vector<std::string>{"compare", "--remark", "R213", "--grid",
                                               "2.4:3.0:0.3"},
                      std::vector<std::string>{"corpus-list"}}) {
        const auto res = run_cli(args);
        REQUIRE(res.exit == 0);
        CHECK(landau::report::dump(json::parse(res.out)) == res.out);
    }
}

TEST_CASE("compare csv carries the fixed header", "[cli]") {
    const auto res = run_cli({"compare", "--remark", "R211", "--grid", "1.5:2.5:0.5", "--csv"});
    REQUIRE(res.exit == 0);
    const auto lines = split(res.out, '\n');
    REQUIRE(lines.size() >= 4);
    CHECK(lines[0] == "param,r_prime,r,rho_old,rho_oldest,pass");
    // three-row chain: the oldest column stays empty
    CHECK(split(lines[1], ',')[4].empty());
    CHECK(split(lines[1], ',')[5] == "true");
}

TEST_CASE("four-row chains fill the oldest column", "[cli]") {
    const auto res = run_cli({"compare", "--remark", "R213", "--grid", "2.4:2.4:1", "--csv"});
    REQUIRE(res.exit == 0);
    const auto lines = split(res.out, '\n');
    REQUIRE(lines.size() >= 3);
    CHECK(!split(lines[1], ',')[4].empty());
}

TEST_CASE("csv and json carry bit-identical numbers", "[cli]") {
    const auto js = run_cli({"radii", "--theorem", "B", "--M", "5"});
    const auto cs = run_cli({"radii", "--theorem", "B", "--M", "5", "--csv"});
    REQUIRE(js.exit == 0);
    REQUIRE(cs.exit == 0);
    const json doc = json::parse(js.out);
    const auto lines = split(cs.out, '\n');
    REQUIRE(lines.size() >= 2);
    const auto cells = split(lines[1], ',');
    CHECK(cells[0] == landau::report::format_double(doc["rho"].get<double>()));
    CHECK(cells[1] == landau::report::format_double(doc["sigma"].get<double>()));
}

TEST_CASE("exploratory grids exit zero with the status marked", "[cli]") {
    const auto res = run_cli({"compare", "--remark", "R213", "--grid", "1.5:2.0:0.5"});
    REQUIRE(res.exit == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["status"] == "exploratory");
    CHECK(!doc["rows"][0]["pass"].get<bool>()); // strictness genuinely fails below crossover
    CHECK(!doc["rows"][0]["in_regime"].get<bool>());
}

TEST_CASE("usage errors exit two with a diagnostic", "[cli]") {
    CHECK(run_cli({"radii", "--theorem", "Z9"}).exit == 2);
    CHECK(run_cli({"radii", "--theorem", "Z9"}).err.find("valid:") != std::string::npos);
    CHECK(run_cli({"radii", "--theorem", "D", "--M1", "1"}).exit == 2); // missing M2
    CHECK(run_cli({"compare", "--remark", "R1"}).exit == 2);            // missing --grid
    CHECK(run_cli({"compare", "--remark", "R27", "--grid", "5:1:1"}).exit == 2);
    CHECK(run_cli({"compare", "--remark", "R27", "--grid", "1:2"}).exit == 2);
    CHECK(run_cli({"verify", "--M", "2"}).exit == 2); // neither --theorem nor --classic
    CHECK(run_cli({"coeffs", "--map", "unknown", "--M", "1"}).exit == 2);
    CHECK(run_cli({"radii", "--theorem", "A", "--M", "2", "--json", "--csv"}).exit == 2);
    CHECK(run_cli({"--nonsense"}).exit == 2);
}

TEST_CASE("bare invocation and help exit zero", "[cli]") {
    const auto bare = run_cli({});
    CHECK(bare.exit == 0);
    CHECK(bare.out.find("Usage") != std::string::npos);
    CHECK(run_cli({"--help"}).exit == 0);
}

TEST_CASE("coeffs audits a corpus map end to end", "[cli]") {
    const auto res = run_cli({"coeffs", "--map", "f_an", "--M", "2", "--a", "1", "--n", "3"});
    REQUIRE(res.exit == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["status"] == "ok");
    REQUIRE(!doc["rows"].empty());
    for (const auto& row : doc["rows"])
        CHECK(row["slack"].get<double>() >= -1e-8);
}

TEST_CASE("an unresolvable extraction is reported as a failure", "[cli]") {
    // at r = 0.02 the n = 16 row amplifies roundoff by r^-16; the audit must
    // say so rather than mask it
    const auto res = run_cli({"coeffs", "--map", "f_an", "--M", "2", "--a", "1", "--n", "3",
                              "--r", "0.02"});
    CHECK(res.exit == 1);
    CHECK(json::parse(res.out)["status"] == "fail");
}

TEST_CASE("corpus-list names every map with quoted csv", "[cli]") {
    const auto js = run_cli({"corpus-list"});
    REQUIRE(js.exit == 0);
    CHECK(json::parse(js.out)["rows"].size() == 7);

    const auto cs = run_cli({"corpus-list", "--csv"});
    CHECK(cs.out.find("\"|f| <= M, J(0) = 1\"") != std::string::npos);
}

TEST_CASE("verify runs the scan battery for a theorem row", "[cli]") {
    const auto res = run_cli({"verify", "--theorem", "T210", "--M", "1.5", "--grid-n", "32"});
    REQUIRE(res.exit == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["status"] == "ok");
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["check"] == "injectivity");
    CHECK(doc["rows"][1]["check"] == "coverage");
    CHECK(doc["rows"][2]["check"] == "min_jacobian");
    CHECK(doc["rows"][2]["pass"].is_null()); // informational row
}

TEST_CASE("verify classic checks the critical ring", "[cli]") {
    const auto res = run_cli({"verify", "--classic", "--M", "2", "--grid-n", "32"});
    REQUIRE(res.exit == 0);
    const json doc = json::parse(res.out);
    CHECK(doc["status"] == "ok");
    bool saw_ring = false;
    for (const auto& row : doc["rows"])
        if (row["check"] == "critical_ring") {
            saw_ring = true;
            CHECK(row["value"].get<double>() <= 1e-8);
        }
    CHECK(saw_ring);
}
