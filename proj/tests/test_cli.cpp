#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chains/cli.hpp"
#include "chains/errors.hpp"
#include "chains/io.hpp"

using namespace chains;
namespace cli = chains::cli;

namespace {

void write_square(const std::string& path) {
    std::ofstream out(path);
    out << R"({"dim": 2, "points": [[0,0],[1,0],[1,1],[0,1]]})";
}

// Convenience wrapper mirroring a shell invocation.
int run_main(const std::vector<std::string>& args, std::string& stdout_text,
             std::string& stderr_text) {
    std::vector<const char*> argv{"chains"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    stdout_text = out.str();
    stderr_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("argument parsing") {
    const auto spec =
        cli::parse_args({"count", "--points", "p.json", "--deltas", "1,1,2"});
    const auto& count = std::get<cli::CountCmd>(spec);
    CHECK(count.points_file == "p.json");
    CHECK(count.deltas == std::vector<double>{1.0, 1.0, 2.0});
    CHECK(count.method == "dfs");
    CHECK(count.tol == 1e-9);

    const auto bounds = cli::parse_args({"bounds", "--k", "5", "--dim", "2"});
    CHECK(std::get<cli::BoundsCmd>(bounds).k == 5);

    CHECK_THROWS_AS(cli::parse_args({"count", "--points", "p.json", "--deltas", "-1"}),
                    cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"count", "--points", "p.json", "--deltas", "1,zap"}),
                    cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"count", "--deltas", "1"}), cli::UsageError);  // no --points
    CHECK_THROWS_AS(cli::parse_args({"count", "--points", "p", "--deltas", "1", "--what"}),
                    cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"frobnicate"}), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({}), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"count", "--points", "p", "--deltas", "1", "--method", "x"}),
                    cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"count", "--points", "p", "--deltas", "1", "--tol", "0.5"}),
                    cli::UsageError);
    CHECK_THROWS_AS(cli::parse_args({"experiment"}), cli::UsageError);
    CHECK_THROWS_AS(
        cli::parse_args({"construct", "--family", "purwin-r3", "--n", "10", "--delta1", "1",
                         "--delta2", "2"}),
        cli::UsageError);  // purwin needs --k
    CHECK_THROWS_AS(
        cli::parse_args({"construct", "--family", "lenz-r4", "--n", "12", "--k", "2", "--delta1",
                         "1", "--delta2", "2"}),
        cli::UsageError);  // lenz takes one distance
    CHECK_THROWS_AS(
        cli::parse_args({"construct", "--family", "hinge", "--n", "9", "--delta1", "1"}),
        cli::UsageError);  // hinge needs delta2
    CHECK_THROWS_AS(cli::parse_args({"bounds", "--k", "3", "--dim", "2", "--u-exp", "abc"}),
                    cli::UsageError);
}

TEST_CASE("count command") {
    write_square("cli_square.json");
    std::string out, err;

    REQUIRE(run_main({"count", "--points", "cli_square.json", "--deltas", "1", "--method",
                      "brute"},
                     out, err) == 0);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["count"] == "8");
    CHECK(doc["k"] == 1);
    CHECK(doc["n"] == 4);
    CHECK(doc["tol"] == 1e-9);

    // dfs and walk agree with brute on this input
    std::string out_dfs, out_walk;
    REQUIRE(run_main({"count", "--points", "cli_square.json", "--deltas", "1"}, out_dfs, err) == 0);
    CHECK(nlohmann::json::parse(out_dfs)["count"] == "8");
    REQUIRE(run_main({"count", "--points", "cli_square.json", "--deltas", "1", "--method", "walk"},
                     out_walk, err) == 0);
    CHECK(nlohmann::json::parse(out_walk)["count"] == "8");

    // output keys arrive sorted for diffability
    CHECK(out.find("\"count\"") < out.find("\"deltas\""));
    CHECK(out.find("\"deltas\"") < out.find("\"k\""));
    CHECK(out.find("\"method\"") < out.find("\"n\""));

    std::string csv;
    REQUIRE(run_main({"count", "--points", "cli_square.json", "--deltas", "1,1", "--format", "csv"},
                     csv, err) == 0);
    CHECK(csv.find("count,k,method,n,tol") == 0);
    CHECK(csv.find("8,2,dfs,4,") != std::string::npos);
}

TEST_CASE("construct and round trip") {
    std::string out, err;
    REQUIRE(run_main({"construct", "--family", "hinge", "--n", "101", "--delta1", "1", "--delta2",
                      "2", "--out", "cli_hinge.json"},
                     out, err) == 0);
    auto echo = nlohmann::json::parse(out);
    CHECK(echo["predicted_lb"] == "2500");
    CHECK(echo["n"] == 101);

    // the emitted file is a loadable point set with the full schema
    const PointSet ps = load_point_set("cli_hinge.json");
    CHECK(ps.size() == 101);
    std::ifstream in("cli_hinge.json");
    nlohmann::json full;
    in >> full;
    CHECK(full["predicted_exponent"] == "2");
    CHECK(full["deltas"].size() == 2);

    // counting the construction reproduces at least the echoed bound
    std::string count_out;
    REQUIRE(run_main({"count", "--points", "cli_hinge.json", "--deltas", "1,2"}, count_out, err) ==
            0);
    const auto counted = nlohmann::json::parse(count_out);
    CHECK(std::stoll(counted["count"].get<std::string>()) >= 2500);

    // without --out the whole construction lands on stdout
    std::string inline_out;
    REQUIRE(run_main({"construct", "--family", "lenz-r4", "--n", "12", "--k", "2", "--delta1",
                      "1"},
                     inline_out, err) == 0);
    const auto doc = nlohmann::json::parse(inline_out);
    CHECK(doc["points"].size() == 12);
    CHECK(doc["predicted_lb"] == "360");
}

TEST_CASE("bounds command") {
    std::string out, err;
    REQUIRE(run_main({"bounds", "--k", "3", "--dim", "2"}, out, err) == 0);
    CHECK(out.find("13/6") != std::string::npos);
    CHECK(out.find("7/3") != std::string::npos);

    std::string csv;
    REQUIRE(run_main({"bounds", "--k", "1", "--kmax", "4", "--dim", "3", "--format", "csv"}, csv,
                     err) == 0);
    CHECK(csv.find("590/197") != std::string::npos);
    CHECK(csv.find("upper+eps") != std::string::npos);
}

TEST_CASE("experiment command") {
    std::string out, err;
    REQUIRE(run_main({"experiment", "growth", "--family", "hinge", "--sizes", "20,40,80",
                      "--delta1", "1", "--delta2", "2", "--out", "cli_growth.csv"},
                     out, err) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["family"] == "hinge");
    CHECK(doc["counts"].size() == 3);
    std::ifstream in("cli_growth.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,count,ln_n,ln_count");
}

TEST_CASE("rich command") {
    write_square("cli_square.json");
    std::string out, err;
    REQUIRE(run_main({"rich", "--points", "cli_square.json", "--delta", "1", "--r", "2,3"}, out,
                     err) == 0);
    const auto doc = nlohmann::json::parse(out);
    CHECK(doc["rows"][0]["empirical"] == 4);
    CHECK(doc["rows"][1]["empirical"] == 0);
}

TEST_CASE("exit codes") {
    std::string out, err;
    CHECK(run_main({"count", "--deltas", "1"}, out, err) == 1);  // usage
    CHECK(err.find("error:") == 0);

    // validation: delta order wrong for purwin
    CHECK(run_main({"construct", "--family", "purwin-r3", "--n", "10", "--k", "2", "--delta1",
                    "5", "--delta2", "3"},
                   out, err) == 2);

    // validation: file with duplicate points
    {
        std::ofstream bad("cli_dup.json");
        bad << R"({"dim": 2, "points": [[0,0],[0,0]]})";
    }
    CHECK(run_main({"count", "--points", "cli_dup.json", "--deltas", "1"}, out, err) == 2);
    CHECK(run_main({"count", "--points", "cli_missing.json", "--deltas", "1"}, out, err) == 2);

    // brute-force guard trips as a validation failure
    CHECK(run_main({"count", "--points", "cli_square.json", "--deltas", "1,1,1,1,1,1,1",
                    "--method", "brute"},
                   out, err) == 2);

    CHECK(run_main({"--help"}, out, err) == 0);
    CHECK(out.find("count") != std::string::npos);

    CHECK(run_main({"rich", "--points", "cli_square.json", "--delta", "1", "--r", "1"}, out,
                   err) == 2);  // r < 2 is a domain failure
}

TEST_CASE("csv point sets load") {
    {
        std::ofstream csv("cli_points.csv");
        csv << "0,0\n1,0\n1,1\n0,1\n";
    }
    std::string out, err;
    REQUIRE(run_main({"count", "--points", "cli_points.csv", "--deltas", "1"}, out, err) == 0);
    CHECK(nlohmann::json::parse(out)["count"] == "8");

    {
        std::ofstream csv("cli_ragged.csv");
        csv << "0,0\n1,0,3\n";
    }
    CHECK(run_main({"count", "--points", "cli_ragged.csv", "--deltas", "1"}, out, err) == 2);
}
