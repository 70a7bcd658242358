#include <doctest.h>

#include <algorithm>
#include <set>

#include "parkstat/verify.hpp"

using namespace parkstat;

TEST_CASE("every suite runs green at small options") {
    VerifyOptions opt;
    opt.max_n = 4;
    opt.N = 5;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        SuiteResult res = run_suite(name, opt);
        INFO("suite ", name);
        CHECK(res.ok());
    }
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS_AS(run_suite("frobulator", VerifyOptions{}), std::invalid_argument);
}

TEST_CASE("corrupt mode makes the identity suites fail") {
    VerifyOptions opt;
    opt.max_n = 3;
    opt.N = 4;
    opt.corrupt = true;
    for (const auto& name : {"pf-gf", "upf-gf", "stanley-gf", "a-at-2", "pf-sym-gf",
                             "upf-sym-gf", "upf-graded-gf"}) {
        SuiteResult res = run_suite(name, opt);
        INFO("suite ", name);
        CHECK_FALSE(res.ok());
    }
}

TEST_CASE("the all-suite covers the full operation catalog") {
    std::set<std::string> covered;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        for (const auto& op : ops_covered(name)) covered.insert(op);
    }
    for (const auto& op : op_catalog()) {
        INFO("op ", op);
        CHECK(covered.count(op) == 1);
    }
    // and nothing outside the catalog is claimed
    std::set<std::string> catalog(op_catalog().begin(), op_catalog().end());
    for (const auto& op : covered) {
        INFO("claimed ", op);
        CHECK(catalog.count(op) == 1);
    }
}

TEST_CASE("suite JSON is well formed and carries statuses") {
    VerifyOptions opt;
    opt.max_n = 3;
    opt.N = 3;
    SuiteResult res = run_suite("counts", opt);
    std::string j = res.to_json();
    CHECK(j.find("\"suite\":\"counts\"") != std::string::npos);
    CHECK(j.find("\"status\":\"pass\"") != std::string::npos);
}
