#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "weylpi/report.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(WEYLPI_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("normalize") {
    auto r = run("normalize --expr \"[[x1,x2],x3]\"");
    CHECK(r.code == 0);
    CHECK(r.out == "(1,1,1): beta=0 (x1*x2*x3) terms: 0\n");
    r = run("normalize --expr \"x2*x1\"");
    CHECK(r.code == 0);
    CHECK(r.out == "(1,1): beta=1 (x1*x2) terms: -[x1,x2]\n");
    r = run("normalize --expr 0");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    r = run("normalize --expr \"x3*[x1,x2]\" --trace");
    CHECK(r.out.find("st3: x3 [x1,x2]  ->  x2 [x1,x3] - x1 [x2,x3]") != std::string::npos);
    r = run("normalize --field fp:5 --expr \"x2*x1\" --json");
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["field"] == "fp:5");
    CHECK(j["normal_forms"][0]["beta"] == "1");
    CHECK(run("normalize --expr \"x1 +\"").code == 2);
    CHECK(run("normalize --expr \"y1\"").code == 2);
    CHECK(run("normalize --field fp:4 --expr x1").code == 2);
}

TEST_CASE("check") {
    auto r = run("check --expr \"x1*[x2,x3] - x2*[x1,x3] + x3*[x1,x2]\"");
    CHECK(r.code == 0);
    CHECK(r.out == "identity\n");
    r = run("check --expr \"[x1,x2]\"");
    CHECK(r.code == 1);
    CHECK(r.out == "not-identity\n");
    CHECK(run("check --expr \"[[x1,x2],x3*x4*x5*x6]\"").code == 0);
    CHECK(run("check --expr \"((\"").code == 2);
}

TEST_CASE("enumerate") {
    auto r = run("enumerate --mdeg 1,1,1,1,1");
    CHECK(r.code == 0);
    CHECK(r.out.substr(r.out.rfind("count=")) == "count=9\n");
    CHECK(run("enumerate --mdeg 1,1").out == "[x1,x2]\ncount=1\n");
    CHECK(run("enumerate --mdeg 3").out == "count=0\n");
    CHECK(run("enumerate --mdeg 1,x").code == 2);
}

TEST_CASE("idbasis") {
    const auto r = run("idbasis --mdeg 2,1");
    CHECK(r.code == 0);
    CHECK(r.out == "x1^2*x2 - 2*x1*x2*x1 + x2*x1^2\ndim=1\n");
    CHECK(run("idbasis --mdeg 1,1,1 --field fp:7").out.find("dim=3") != std::string::npos);
}

TEST_CASE("verify") {
    const std::string path = "cli_verify_test.json";
    auto r = run("verify --degree 4 --jobs 2 --json " + path);
    CHECK(r.code == 0);
    CHECK(r.out.find("verified 5/5") != std::string::npos);
    std::ifstream in(path);
    const auto j = nlohmann::json::parse(in);
    CHECK(weylpi::validate_report(j).empty());
    CHECK(j["reports"].size() == 5);
    std::remove(path.c_str());

    CHECK(run("verify --mdeg 2,1 --field fp:7").code == 0);
    CHECK(run("verify").code == 2);
    CHECK(run("verify --degree 2 --mdeg 1,1").code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("resource limit exit code") {
    const std::string cmd = "WEYLPI_MAX_DEGREE=3 " + std::string(WEYLPI_CLI) + " verify --degree 4 >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 3);
}

TEST_CASE("deterministic output") {
    const auto a = run("verify --degree 5 --no-timing --json /dev/stdout");
    const auto b = run("verify --degree 5 --no-timing --json /dev/stdout --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
