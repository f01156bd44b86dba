#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using eqdeg::cli::run;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

auto invoke(std::vector<std::string> args) -> Run
{
    std::ostringstream out;
    std::ostringstream err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

auto scratch() -> fs::path
{
    const char *env = std::getenv("EQDEG_SCRATCH");
    fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "eqdeg_cli_scratch";
    fs::create_directories(dir);
    return dir;
}

auto slurp(const fs::path &p) -> std::string
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("detect exit codes follow the answer")
{
    auto k23 = invoke({"detect", "--graph", "DFw"});
    CHECK(k23.code == eqdeg::cli::kNegative);
    auto doc = nlohmann::json::parse(k23.out);
    CHECK(doc["schema"] == "detect-result/1");
    CHECK(doc["graphs"][0]["witness"].is_null());

    auto p5 = invoke({"detect", "--graph", "DhC", "--length", "1"});
    CHECK(p5.code == eqdeg::cli::kOk);

    auto csv = invoke({"detect", "--graph", "DhC", "--graph", "DFw", "--format", "csv", "--length", "1"});
    CHECK(csv.out.starts_with("graph6,length,witness\n"));
}

TEST_CASE("bad input is a usage error")
{
    CHECK(invoke({"detect", "--graph", "D!!"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"detect", "--in", (scratch() / "missing.g6").string()}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"search", "--vertices", "12"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"search"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"verify", "--vertices", "4"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"lambda", "--instance", "5", "9", "4", "6"}).code == eqdeg::cli::kUsage);
    CHECK(invoke({"construct", "--family", "wheel", "--size", "4"}).code == eqdeg::cli::kUsage);
}

TEST_CASE("search output is byte-identical across runs and worker counts")
{
    auto a = invoke({"search", "--vertices", "7"});
    auto b = invoke({"search", "--vertices", "7", "--jobs", "3"});
    REQUIRE(a.code == eqdeg::cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.out == invoke({"search", "--vertices", "7"}).out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(doc["schema"] == "search-result/1");
    CHECK(doc["p"] == 12);
    CHECK(doc["seconds"].is_null());

    auto timed = nlohmann::json::parse(invoke({"search", "--vertices", "5", "--timing"}).out);
    CHECK(timed["seconds"].is_number());

    auto none = invoke({"search", "--vertices", "5", "--min-edges", "7"});
    CHECK(none.code == eqdeg::cli::kNegative);
}

TEST_CASE("files written with --out and --g6-out")
{
    auto dir = scratch();
    auto json = dir / "search7.json";
    auto g6 = dir / "search7.g6";
    auto r = invoke({"search", "--vertices", "7", "--out", json.string(), "--g6-out", g6.string()});
    REQUIRE(r.code == eqdeg::cli::kOk);
    CHECK(r.out.empty());
    CHECK(nlohmann::json::parse(slurp(json))["p"] == 12);
    CHECK(slurp(g6) == "F?~v_\n");

    auto d = invoke({"detect", "--in", g6.string()});
    CHECK(d.code == eqdeg::cli::kNegative);
}

TEST_CASE("verify and certify")
{
    auto v = invoke({"verify", "--vertices", "7"});
    CHECK(v.code == eqdeg::cli::kOk);
    auto doc = nlohmann::json::parse(v.out);
    CHECK(doc["schema"] == "theorem-check/1");
    CHECK(doc["holds"] == true);
    CHECK(doc["p"] == 12);

    auto c = invoke({"certify", "--vertices", "6"});
    CHECK(c.code == eqdeg::cli::kOk);
    auto report = nlohmann::json::parse(c.out);
    CHECK(report["schema"] == "cert-report/1");

    auto mixed = invoke({"certify", "--graph", "DFw", "--graph", "Dhc"});
    CHECK(mixed.code == eqdeg::cli::kOk);
    CHECK(mixed.err.find("skipped 1") != std::string::npos);
}

TEST_CASE("lambda grid")
{
    auto r = invoke({"lambda", "--grid", "n=6..6"});
    REQUIRE(r.code == eqdeg::cli::kOk);
    CHECK(r.out.starts_with("n,delta,beta,b_size,case,closed,oracle,equal\n"));
    CHECK(r.out.find(",false") == std::string::npos);
    auto one = invoke({"lambda", "--instance", "6", "9", "7", "5"});
    CHECK(one.out.find("6,9,7,5,1,40,40,true") != std::string::npos);
}

TEST_CASE("construct, table and enumerate")
{
    auto k = invoke({"construct", "--family", "complete-bipartite", "--size", "2", "--size", "3", "--format", "g6"});
    CHECK(k.code == eqdeg::cli::kOk);
    CHECK(k.out == "D]o\n");

    auto t = invoke({"table", "--length", "3", "--vertices", "5..6", "--format", "csv"});
    CHECK(t.code == eqdeg::cli::kOk);
    CHECK(t.out.starts_with("length,order,p,"));

    auto e1 = invoke({"enumerate", "--vertices", "6"});
    auto e3 = invoke({"enumerate", "--vertices", "6", "--jobs", "3"});
    CHECK(e1.out == e3.out);
    CHECK(std::count(e1.out.begin(), e1.out.end(), '\n') == 156);

    auto free = invoke({"enumerate", "--vertices", "5", "--property-free", "--min-edges", "6"});
    CHECK(free.out == "DFw\n");
}
