#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unicolor/canonical.hh>
#include <unicolor/constructions.hh>
#include <unicolor/graph.hh>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using nlohmann::json;
using std::string;

namespace
{
    struct Run
    {
        int code;
        std::vector<json> lines;
    };

    /// Runs the tool through the shell; every stdout line must be JSON.
    auto run(const string & args, const string & env = "") -> Run
    {
        string command = env + " " + UNICOLOR_CLI + " " + args + " 2>/dev/null";
        FILE * pipe = popen(command.c_str(), "r");
        REQUIRE(pipe);
        string output;
        std::array<char, 4096> buffer;
        while (auto got = std::fread(buffer.data(), 1, buffer.size(), pipe))
            output.append(buffer.data(), got);
        int status = pclose(pipe);

        Run result{ WIFEXITED(status) ? WEXITSTATUS(status) : -1, { } };
        std::istringstream in{ output };
        string line;
        while (std::getline(in, line)) {
            CAPTURE(line);
            REQUIRE(json::accept(line));
            result.lines.push_back(json::parse(line));
        }
        return result;
    }

    auto scratch(const string & name) -> string
    {
        auto dir = std::filesystem::temp_directory_path() / "unicolor-cli-tests";
        std::filesystem::create_directories(dir);
        return (dir / name).string();
    }
}

TEST_CASE("check reports verdicts and exit codes")
{
    auto k4 = run("check --k 4 C~");
    CHECK(k4.code == 0);
    REQUIRE(k4.lines.size() == 1);
    CHECK(k4.lines[0]["uniquely_colourable"] == true);
    CHECK(k4.lines[0]["partition_count"] == 1);

    auto c5 = run("check --k 3 --catalog C5");
    CHECK(c5.code == 1);
    CHECK(c5.lines.at(0)["uniquely_colourable"] == false);

    auto figure = run("check --k 3 --catalog figure1b");
    CHECK(figure.code == 0);
    CHECK(figure.lines.at(0)["xu_slack"] == 2);
}

TEST_CASE("check reports malformed lines one by one")
{
    auto path = scratch("mixed.g6");
    std::ofstream{ path } << "C~\nA\n\n~?@@\nBw\n";
    auto r = run("check --k 3 --input " + path);
    CHECK(r.code == 2);
    REQUIRE(r.lines.size() == 4);
    CHECK(r.lines[0]["uniquely_colourable"] == false);
    CHECK(r.lines[1]["error"] == "truncated");
    CHECK(r.lines[1]["input"] == "line2");
    CHECK(r.lines[2]["error"] == "order_too_large");
    CHECK(r.lines[3]["uniquely_colourable"] == true);

    auto stdin_run = run("check --k 4 --input - < " + path);
    CHECK(stdin_run.code == 2);
}

TEST_CASE("check budget and input errors")
{
    auto unknown = run("check --k 8 --budget-nodes 3 G?????");
    CHECK(unknown.code == 3);
    CHECK(unknown.lines.at(0)["uniquely_colourable"].is_null());

    CHECK(run("check --k 3 C~ --catalog K3").code == 2);
    CHECK(run("check --k 3").code == 2);
    CHECK(run("check C~").code == 2);
    CHECK(run("check --k 3 --catalog nosuch").code == 2);
    CHECK(run("bogus").code == 2);
}

TEST_CASE("check writes dot with class fills")
{
    auto path = scratch("figure.dot");
    CHECK(run("check --k 3 --catalog figure1a --dot " + path).code == 0);
    std::ifstream in{ path };
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("fillcolor=green") != string::npos);
    CHECK(text.str().find("fillcolor=blue") != string::npos);
}

TEST_CASE("nu")
{
    auto fig = run("nu --catalog figure1a --verify");
    CHECK(fig.code == 0);
    REQUIRE(fig.lines.size() == 1);
    auto & out = fig.lines[0];
    CHECK(out["order"] == 48);
    CHECK(out["edges"] == 244);
    CHECK(out["class_sizes"] == json{ 12, 12, 12, 12 });
    CHECK(out["report"]["uniquely_colourable"] == true);
    for (auto & [name, ok] : out["checks"][0].items())
        CHECK(ok == true);
    CHECK(unicolor::parse_graph6(out["graph6"].get<string>()).order() == 48);

    auto k3 = run("nu --catalog K3");
    CHECK(k3.code == 0);
    CHECK(k3.lines.at(0)["order"] == 12);

    auto twice = run("nu --catalog figure1a --iterations 2");
    CHECK(twice.code == 2);
    CHECK(twice.lines.at(0)["error"] == "order_overflow");

    CHECK(run("nu A_ --colouring 0,0").code == 2);
    auto given = run("nu Bw --colouring 2,1,0");
    CHECK(given.code == 0);
    CHECK(given.lines.at(0)["order"] == 12);
}

TEST_CASE("census runs")
{
    for (int n : { 3, 6, 9 }) {
        auto r = run("census --n " + std::to_string(n) + " --k 3 --triangle-free --balanced");
        CHECK(r.code == 0);
        REQUIRE(r.lines.size() == 1);
        CHECK(r.lines[0]["summary"]["witnesses"] == 0);
        CHECK(r.lines[0]["summary"]["complete"] == true);
    }

    auto r = run("census --n 12 --k 3 --edges 22:23 --triangle-free --connected --min-degree 2 --balanced");
    CHECK(r.code == 0);
    REQUIRE(r.lines.size() >= 4);
    std::set<string> found;
    for (auto & line : r.lines)
        if (line.contains("graph6")) {
            CHECK(line["n"] == 12);
            CHECK(line["k"] == 3);
            CHECK(line["report"]["uniquely_colourable"] == true);
            found.insert(unicolor::canonical_form(unicolor::parse_graph6(line["graph6"].get<string>())));
        }
    for (auto & entry : unicolor::figure1_graphs())
        CHECK(found.count(unicolor::canonical_form(entry.coloured.graph)) == 1);

    CHECK(run("census --n 20").code == 2);
    CHECK(run("census --n 7 --k 3 --balanced").code == 2);
    CHECK(run("census --n 7 --edges 5-6").code == 2);
}

TEST_CASE("census budget, checkpoint and resume")
{
    auto path = scratch("census.checkpoint");
    std::filesystem::remove(path);
    auto whole = run("census --n 8 --k 3");
    REQUIRE(whole.code == 0);

    auto first = run("census --n 8 --k 3 --budget-nodes 100 --checkpoint " + path);
    CHECK(first.code == 3);
    CHECK(first.lines.back()["summary"]["complete"] == false);
    REQUIRE(std::filesystem::exists(path));

    Run last = first;
    std::vector<json> witnesses;
    for (auto & line : first.lines)
        if (line.contains("graph6"))
            witnesses.push_back(line);
    int rounds = 0;
    while (last.code == 3 && rounds++ < 500) {
        last = run("census --n 8 --k 3 --budget-nodes 100 --resume " + path + " --checkpoint " + path);
        witnesses.clear();
        for (auto & line : last.lines)
            if (line.contains("graph6"))
                witnesses.push_back(line);
    }
    CHECK(last.code == 0);
    std::vector<json> expected;
    for (auto & line : whole.lines)
        if (line.contains("graph6"))
            expected.push_back(line);
    CHECK(witnesses == expected);
    CHECK(last.lines.back()["summary"]["generated"] == whole.lines.back()["summary"]["generated"]);

    CHECK(run("census --n 8 --k 3 --triangle-free --resume " + path).code == 2);
}

TEST_CASE("census output does not depend on the thread count")
{
    auto strip = [] (Run r) {
        for (auto & line : r.lines)
            if (line.contains("summary"))
                line["summary"].erase("seconds");
        return r.lines;
    };
    auto one = run("census --n 8 --k 3 --threads 1");
    auto env = run("census --n 8 --k 3", "UNICOLOR_THREADS=3");
    auto flag = run("census --n 8 --k 3 --threads 2");
    CHECK(strip(one) == strip(env));
    CHECK(strip(one) == strip(flag));
}

TEST_CASE("census can list every graph")
{
    auto r = run("census --n 5 --triangle-free --list");
    CHECK(r.code == 0);
    CHECK(r.lines.size() == 15);
}

TEST_CASE("sample")
{
    auto a = run("sample --k 3 --n 4 --eps 0.2 --seed 7");
    CHECK(a.code == 0);
    CHECK(a.lines.at(0)["edges"] == 16);
    CHECK(run("sample --k 3 --n 4 --eps 0.2 --seed 7").lines == a.lines);

    auto g = run("sample --k 3 --n 8 --eps 0.05 --girth 4 --seed 11");
    CHECK(g.code == 0);
    auto girth = g.lines.at(0)["cleaned"]["girth"];
    CHECK((girth.is_null() || girth.get<int>() >= 4));

    CHECK(run("sample --k 3 --n 4 --eps 0.2 --girth 4").code == 2);
    CHECK(run("sample --k 3 --n 30").code == 2);
}

TEST_CASE("catalog")
{
    auto r = run("catalog");
    CHECK(r.code == 0);
    CHECK(r.lines.size() == unicolor::catalog_names().size());
}
