#include <doctest.h>

#include "weylpi/parser.hpp"
#include "weylpi/report.hpp"

using namespace weylpi;

TEST_CASE("report serialization") {
    const auto r = verify_conjecture(MultiDegree{2, 1});
    const auto j = to_json(r);
    CHECK(j["mdeg"] == nlohmann::json::array({2, 1}));
    CHECK(j["field"] == "q");
    CHECK(j["dim_id"] == 1);
    CHECK(j["dim_I"] == 1);
    CHECK(j["verdict"] == "Verified");
    CHECK(j["witness"].is_null());
    CHECK(validate_report(j).empty());
    const auto all = to_json(std::vector<ConjectureReport>{r, r});
    CHECK(all["summary"]["total"] == 2);
    CHECK(validate_report(all).empty());
}

TEST_CASE("validation finds problems") {
    auto j = to_json(verify_conjecture(MultiDegree{2, 1}, FieldSpec::prime(5)));
    CHECK(j["field"] == "fp:5");
    j["verdict"] = "Maybe";
    j.erase("dim_id");
    j["extra"] = 1;
    CHECK(validate_report(j).size() == 3);
    CHECK_FALSE(validate_report(nlohmann::json::array()).empty());
}

TEST_CASE("normal form and trace serialization") {
    std::vector<RewriteStep> steps;
    const auto nf = normal_form(parse("x2*x1"), {.trace = &steps}).begin()->second;
    const auto j = to_json(nf);
    CHECK(j["beta"] == "1");
    CHECK(j["terms"][0]["monomial"] == "[x1,x2]");
    CHECK(j["terms"][0]["coefficient"] == "-1");
    CHECK(to_json(steps.at(0))["rule"] == "swap");
}
