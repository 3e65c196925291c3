#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rhombus/cli.hpp"

using namespace rhombus;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify conj2 passes with the known count") {
    const auto r = run_cli({"verify", "conj2", "--n", "5"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(r.out.find("43") != std::string::npos);
}

TEST_CASE("verify emits schema-shaped JSON") {
    const auto r = run_cli({"verify", "conj2", "--n", "5", "--json"});
    CHECK(r.code == cli::kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["check"] == "conj2");
    CHECK(doc["status"] == "pass");
    CHECK(doc["expected"] == "43");
    CHECK(doc["actual"] == "43");
    CHECK(doc["witness"].is_null());
    CHECK(doc["params"]["n"] == 5);
}

TEST_CASE("identical invocations are byte-identical") {
    const auto a = run_cli({"verify", "conj3", "--k", "6", "--horizon", "64", "--json"});
    const auto b = run_cli({"verify", "conj3", "--k", "6", "--horizon", "64", "--json"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("inconclusive checks exit with code 3") {
    const auto r = run_cli({"verify", "conj3", "--k", "6", "--horizon", "4"});
    CHECK(r.code == cli::kExitInconclusive);
}

TEST_CASE("diag prints the D_6 prefix") {
    const auto r = run_cli({"diag", "--k", "6", "--len", "8"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.substr(0, 9) == "11011011\n");

    const auto j = run_cli({"diag", "--k", "6", "--len", "64", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["minimal_period"] == 8);
    CHECK(doc["start_row"] == 4);
}

TEST_CASE("seq prints tables") {
    const auto r = run_cli({"seq", "D", "--max", "3"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out == "1, 4, 19, 89\n");

    const auto j = run_cli({"seq", "B", "--max", "5", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["values"] == nlohmann::json({"1", "3", "5", "11", "21", "43"}));
    CHECK(doc["first_index"] == 0);
}

TEST_CASE("gen prints rows and integer rows") {
    const auto r = run_cli({"gen", "--rows", "4"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out == "1\n111\n10001\n1101011\n");

    const auto i = run_cli({"gen", "--rows", "4", "--integer"});
    CHECK(i.out == "1\n1 1 1\n1 2 4 2 1\n1 3 8 9 8 3 1\n");
}

TEST_CASE("usage errors exit with code 2 and explain themselves") {
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "nonsense", "--n", "3"}).code == cli::kExitUsage);
    CHECK(run_cli({"verify", "conj3", "--n", "3"}).code == cli::kExitUsage);  // missing --k
    CHECK(run_cli({"seq", "Z", "--max", "3"}).code == cli::kExitUsage);
    const auto r = run_cli({"gen"});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == cli::kExitPass);
    CHECK(r.out.find("gen") != std::string::npos);
    CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("the row cap blocks oversized requests") {
    const auto r = run_cli({"gen", "--rows", "2000000"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("row cap") != std::string::npos);
    const auto ok = run_cli({"gen", "--rows", "100", "--row-cap", "100"});
    CHECK(ok.code == cli::kExitPass);
}

TEST_CASE("render writes files and reports geometry") {
    const auto path = std::filesystem::temp_directory_path() / "rhombus-cli-test.pbm";
    const auto r = run_cli({"render", "--source", "rows:2", "--format", "pbm", "--out",
                            path.string(), "--json"});
    CHECK(r.code == cli::kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["width"] == 3);
    CHECK(doc["height"] == 2);
    CHECK(doc["black"] == 4);
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "P1\n3 2\n0 1 0\n1 1 1\n");
    std::filesystem::remove(path);
}

TEST_CASE("oeis compare runs offline") {
    const auto cache = std::filesystem::temp_directory_path() / "rhombus-cli-oeis-cache";
    std::filesystem::remove_all(cache);
    ::setenv("RHOMBUS_OEIS_CACHE", cache.c_str(), 1);
    const auto r = run_cli({"oeis", "compare", "A055099", "--terms", "20", "--json"});
    CHECK(r.code == cli::kExitPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["check"] == "oeis_compare");
    CHECK(doc["status"] == "pass");
    CHECK(doc["params"]["source"] == "fixture");

    CHECK(run_cli({"oeis", "compare", "A999999"}).code == cli::kExitUsage);
    // more terms than the 50-term fixture holds -> inconclusive
    CHECK(run_cli({"oeis", "compare", "A000079", "--terms", "60"}).code ==
          cli::kExitInconclusive);
    ::unsetenv("RHOMBUS_OEIS_CACHE");
}
