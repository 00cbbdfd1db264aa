#include "relosc/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace relosc;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            break;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ','))
            cells.push_back(cell);
        if (!line.empty() && line.back() == ',')
            cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST_CASE("coeffs")
{
    auto r = run({"coeffs", "--form", "pdx", "--order", "2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json({"1", "-1/8", "-1/64"}));

    r = run({"coeffs", "--form", "xdp", "--order", "3"});
    CHECK(r.code == 0);
    const auto xdp = nlohmann::json::parse(r.out);
    CHECK(xdp[0] == "1");
    CHECK(xdp[1] == "-1/16");
    CHECK(xdp[2] == "7/256");
    CHECK(xdp[3] == "-101/8192");

    r = run({"coeffs", "--form", "eta", "--order", "1"});
    CHECK(nlohmann::json::parse(r.out) == nlohmann::json({"1", "3/8"}));

    r = run({"coeffs", "--form", "pdx", "--order", "2", "--format", "csv"});
    CHECK(r.out == "index,coefficient\n0,1\n1,-1/8\n2,-1/64\n");

    CHECK(run({"coeffs", "--form", "abc"}).code == 2);
    CHECK(run({"coeffs", "--order", "65"}).code == 2);
    CHECK(run({"coeffs", "--form", "eta", "--order", "0"}).code == 2);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    auto r = run({"compare", "--epsilon=-1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("epsilon must be positive") != std::string::npos);
    CHECK(run({"action", "--epsilon", "0"}).code == 2);
    CHECK(run({"action", "--epsilon", "0.1", "--method", "magic"}).code == 2);
    CHECK(run({"action", "--epsilon", "0.1", "--m", "-1"}).code == 2);
    CHECK(run({"sweep", "--eps-min", "0.2", "--eps-max", "0.1", "--steps", "4"}).code == 2);
    CHECK(run({"sweep", "--eps-min", "0.1", "--eps-max", "0.2", "--steps", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compare at eps = 0.1")
{
    const auto r = run({"compare", "--epsilon", "0.1", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["records"].size() == 5);
    CHECK(doc["pass"] == true);
    CHECK(doc["max_gated_difference"].get<double>() <= 1e-6);
    for (const auto& d : doc["differences"])
        CHECK(d["gated"] == true);
}

TEST_CASE("compare at eps = 0.5 excludes the diverging xdp row")
{
    const auto r = run({"compare", "--epsilon", "0.5", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    for (const auto& rec : doc["records"]) {
        const bool diverging =
            std::find(rec["flags"].begin(), rec["flags"].end(), "diverging") != rec["flags"].end();
        CHECK(diverging == (rec["method"] == "xdp-series"));
    }
    for (const auto& d : doc["differences"])
        CHECK(d["gated"] == (d["a"] != "xdp-series" && d["b"] != "xdp-series"));
}

TEST_CASE("compare fails with exit 3 on an impossible tolerance")
{
    CHECK(run({"compare", "--epsilon", "0.1", "--tol", "1e-30"}).code == 3);
}

TEST_CASE("sweep")
{
    auto r = run({"sweep", "--eps-min", "0.01", "--eps-max", "0.4", "--steps", "40"});
    CHECK(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 41);
    std::string header;
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        header += (i ? "," : "") + rows[0][i];
    CHECK(header == cli::csv_header);
    double prev = INFINITY;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "pdx-series");
        const double omega = std::stod(rows[i][3]);
        CHECK(omega < prev);
        prev = omega;
    }
    CHECK(std::stod(rows[1][0]) == 0.01);
    CHECK(std::stod(rows[40][0]) == 0.4);

    r = run({"sweep", "--eps-min", "0.05", "--eps-max", "0.3", "--steps", "2"});
    const auto two = parse_csv(r.out);
    REQUIRE(two.size() == 3);
    CHECK(std::stod(two[1][0]) == 0.05);
    CHECK(std::stod(two[2][0]) == 0.3);

    r = run({"sweep", "--eps-min", "0.001", "--eps-max", "10", "--steps", "5", "--log"});
    const auto log_rows = parse_csv(r.out);
    CHECK(std::stod(log_rows[3][0]) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("csv and json renderings agree exactly")
{
    const std::vector<std::string> base{"sweep", "--eps-min", "0.02", "--eps-max", "0.45",
                                        "--steps", "6", "--method", "xdp-series"};
    auto csv_args = base;
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto rows = parse_csv(run(csv_args).out);
    const auto doc = nlohmann::json::parse(run(json_args).out);
    REQUIRE(doc.size() == rows.size() - 1);
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& rec = doc[i];
        const auto& row = rows[i + 1];
        CHECK(rec["epsilon"].get<double>() == std::stod(row[0]));
        CHECK(rec["method"] == row[1]);
        CHECK(rec["J"].get<double>() == std::stod(row[2]));
        CHECK(rec["omega"].get<double>() == std::stod(row[3]));
        CHECK(rec["tau"].get<double>() == std::stod(row[4]));
        CHECK(rec["eta"].get<double>() == std::stod(row[5]));
        CHECK(rec["order"].get<int>() == std::stoi(row[6]));
        CHECK(rec["error_estimate"].get<double>() == std::stod(row[7]));
        std::string flags;
        for (const auto& f : rec["flags"])
            flags += (flags.empty() ? "" : ";") + f.get<std::string>();
        CHECK(flags == row[8]);
    }
    CHECK(rows.back()[8] == "diverging");
}

TEST_CASE("sweep writes to --output")
{
    const auto path = std::filesystem::temp_directory_path() / "relosc_sweep_test.csv";
    const auto r = run({"sweep", "--eps-min", "0.1", "--eps-max", "0.2", "--steps", "3",
                        "--output", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text.rfind(std::string(cli::csv_header) + "\n", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(parse_csv(text).size() == 4);
    std::filesystem::remove(path);
}

TEST_CASE("physical parameters rescale the output")
{
    const auto unit = nlohmann::json::parse(
        run({"action", "--epsilon", "0.2", "--format", "json"}).out)[0];
    const auto scaled = nlohmann::json::parse(
        run({"action", "--epsilon", "0.2", "--format", "json", "--m", "4", "--k", "9", "--c",
             "2"}).out)[0];
    // omega0 = 1.5, rest energy = 16: J scales by 16/1.5, omega by 1.5
    CHECK(scaled["J"].get<double>() ==
          doctest::Approx(unit["J"].get<double>() * 16 / 1.5).epsilon(1e-14));
    CHECK(scaled["omega"].get<double>() ==
          doctest::Approx(unit["omega"].get<double>() * 1.5).epsilon(1e-14));
    CHECK(scaled["eta"].get<double>() == doctest::Approx(unit["eta"].get<double>()).epsilon(1e-14));
}

TEST_CASE("every method produces a full record")
{
    for (const char* m :
         {"nonrel-closed", "pdx-series", "xdp-series", "quadrature", "closed-form", "ode"}) {
        const auto r = run({"frequency", "--epsilon", "0.15", "--method", m, "--format", "json"});
        REQUIRE(r.code == 0);
        const auto rec = nlohmann::json::parse(r.out)[0];
        CHECK(rec["method"] == m);
        for (const char* field : {"J", "omega", "tau", "eta", "error_estimate"})
            CHECK(std::isfinite(rec[field].get<double>()));
        CHECK(rec["flags"].empty());
    }
    const auto big = nlohmann::json::parse(
        run({"period", "--epsilon", "12", "--format", "json"}).out)[0];
    CHECK(big["flags"][0] == "unvalidated-regime");
}

TEST_CASE("format_double round-trips with 17 digits")
{
    CHECK(cli::format_double(0.1) == "0.10000000000000001");
    for (double v : {1.0 / 3.0, 6.02e23, -1e-300, 2.0})
        CHECK(std::stod(cli::format_double(v)) == v);
}
