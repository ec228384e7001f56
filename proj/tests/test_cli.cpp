#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = critwin::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents)
{
    const auto path = std::filesystem::temp_directory_path() / ("critwin_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

const std::string k4_edges = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

} // namespace

TEST_CASE("bounds prints the value, its decimal and the regime")
{
    const auto r = call({"bounds", "--theorem", "1", "--r", "4", "--delta", "3/5"});
    CHECK(r.code == 0);
    CHECK(r.out == "8/25 (0.32), regime=upper\n");
    CHECK(call({"bounds", "--r", "4", "--delta", "0.6"}).out == r.out);

    const auto j = nlohmann::json::parse(call({"bounds", "--json", "--r", "4", "--delta", "7/12"}).out);
    CHECK(j["value"] == "47/144");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(call({}).code == 2);
    CHECK(call({"bounds", "--r", "4"}).code == 2);
    CHECK(call({"bounds", "--r", "4", "--delta", "1/0"}).code == 2);
    CHECK(call({"bounds", "--r", "4", "--delta", "1e-3"}).code == 2);
    CHECK(call({"bounds", "--r", "4", "--delta", "3/5", "--theorem", "3"}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"verify"}).code == 2);
    CHECK(call({"classify", "--in", "/nonexistent/graph"}).code == 2);
    CHECK(call({"construct", "bh-triple", "--delta", "3/5", "--n", "100"}).code == 2);
    const auto e = call({"bounds", "--r", "4", "--delta", "x"});
    CHECK(e.err.find("--delta") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("sweep writes the CSV contract")
{
    const auto path = (std::filesystem::temp_directory_path() / "critwin_cli_fig1.csv").string();
    const auto r = call({"sweep", "--theorem", "1", "--r", "4", "--from", "1/2", "--to", "3/5", "--step", "1/240",
                         "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "delta,value,regime");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 25);
}

TEST_CASE("classify reads edge lists and graph6")
{
    const auto edges = temp_file("k4.edges", k4_edges);
    const auto r = call({"classify", "--in", edges});
    CHECK(r.code == 0);
    CHECK(r.out == "chi=4, delta_chi=3/5, witness=forest K2 in decomposition family; not 4-near-acyclic\n");

    // C5 and K3 in graph6
    const auto g6 = temp_file("pair.g6", "Dhc\nBw\n");
    const auto two = call({"classify", "--in", g6});
    CHECK(two.code == 0);
    CHECK(two.out.find("delta_chi=0") != std::string::npos);
    CHECK(two.out.find("delta_chi=1/3") != std::string::npos);

    const auto j = nlohmann::json::parse(call({"classify", "--json", "--in", edges}).out);
    CHECK(j["verified"] == true);
    CHECK(j["kind"] == "forest-in-family");
}

TEST_CASE("symmetrize respects the degree mode")
{
    // 0-3, 1-2 with A = {0, 1, 3}: the frozen variant drops both edges
    const auto g = temp_file("matching.edges", "4 2\n0 3\n1 2\n");
    const auto cur = call({"symmetrize", "--in", g, "--set", "0,1,3", "--json"});
    const auto frz = call({"symmetrize", "--in", g, "--set", "0,1,3", "--mode", "frozen", "--json"});
    REQUIRE(cur.code == 0);
    REQUIRE(frz.code == 0);
    const auto jc = nlohmann::json::parse(cur.out), jf = nlohmann::json::parse(frz.out);
    CHECK(jc["edges_after"] == 3);
    CHECK(jf["edges_after"] == 0);
    CHECK(call({"symmetrize", "--in", g, "--set", "0,9"}).code == 2);
    CHECK(call({"symmetrize", "--in", g, "--set", "0", "--mode", "lazy"}).code == 2);
}

TEST_CASE("construct reports the build")
{
    const auto r = call({"construct", "eg", "--r", "4", "--delta", "1/3", "--n", "120", "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "eg");
    CHECK(j["clique_number"].get<int>() <= 3);
    CHECK(j.contains("parts"));
}

TEST_CASE("verify exit codes and determinism")
{
    const auto a = call({"verify", "lemma-basic", "--n-max", "4", "--r", "3", "--t", "2", "--json"});
    CHECK(a.code == 0);
    const auto b = call({"--workers", "3", "verify", "lemma-basic", "--n-max", "4", "--r", "3", "--t", "2", "--json"});
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out).contains("wall_time_ms") == false);
    const auto timed = call({"verify", "aes", "--n-max", "4", "--r", "3", "--json", "--timing"});
    CHECK(nlohmann::json::parse(timed.out).contains("wall_time_ms"));

    CHECK(call({"verify", "hall", "--max-side", "2"}).code == 0);
    CHECK(call({"verify", "lemma-basic", "--n-max", "9"}).code == 2);

    // frozen-degree symmetrization loses edges, so the check fails
    const auto z = call({"verify", "zykov", "--trials", "500", "--n-max", "7", "--seed", "3"});
    CHECK(z.code == 1);
    CHECK(z.out.find("edge_monotone") != std::string::npos);
    CHECK(call({"verify", "zykov", "--trials", "500", "--n-max", "7", "--seed", "3", "--mode", "current"}).code == 0);
    CHECK(call({"verify", "zykov", "--trials", "200", "--seed", "5"}).out ==
          call({"--workers", "2", "verify", "zykov", "--trials", "200", "--seed", "5"}).out);
}
