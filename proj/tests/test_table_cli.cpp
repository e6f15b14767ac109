#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "json.hpp"

#include "acfh/table.hpp"
#include "acfh/euclid_eigen.hpp"
#include "acfh/verify.hpp"

using namespace acfh;

TEST_CASE("doubles survive a csv round trip") {
    for (const double v : {1.0 / 3.0, 2.718281828459045, -1e-17, 8.0, 0.1}) {
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv layout") {
    Table t;
    t.command = "demo";
    t.columns = {"name", "value", "ok"};
    t.rows.push_back({std::string("a,b"), 0.5, true});
    t.rows.push_back({std::string("plain"), -1.0, false});
    const std::string csv = to_csv(t);
    CHECK(csv == "name,value,ok\n\"a,b\",0.5,true\nplain,-1,false\n");
}

TEST_CASE("json schema carries command, config, rows, versions") {
    Table t;
    t.command = "demo";
    t.config = {{"mesh", "2048"}};
    t.columns = {"x", "pass"};
    t.rows.push_back({1.25, true});
    const nlohmann::json j = nlohmann::json::parse(to_json(t));
    CHECK(j.contains("command"));
    CHECK(j.contains("config"));
    CHECK(j.contains("rows"));
    CHECK(j.contains("versions"));
    CHECK(j["command"] == "demo");
    CHECK(j["config"]["mesh"] == "2048");
    CHECK(j["rows"][0]["x"] == 1.25);
    CHECK(j["rows"][0]["pass"] == true);
    CHECK(j["versions"].contains("acfh"));
}

TEST_CASE("identical tables serialize identically") {
    const auto build = [] {
        Table t;
        t.command = "psi-table";
        t.columns = {"s", "psi"};
        for (int i = 1; i <= 9; ++i) {
            const double s = i / 10.0;
            t.rows.push_back({s, psi(s)});
        }
        return to_csv(t) + to_json(t);
    };
    CHECK(build() == build());
}
