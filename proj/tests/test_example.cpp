/*
   Copyright 2026 The lhur Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "lhur/example.hpp"
#include "lhur/ffield.hpp"

#include <fstream>

using namespace lhur;

TEST_CASE("built-in graphs match the fixtures") {
    for (const auto& name : example_graph_names()) {
        std::ifstream in(std::string(LHUR_GRAPH_DIR) + "/" + name + ".json");
        REQUIRE(in.good());
        auto fixture = parse_level_graph(nlohmann::json::parse(in));
        CHECK(to_json(fixture) == to_json(example_graph(name)));
    }
    CHECK_THROWS_AS(example_graph("delta_2"), SchemaError);
}

TEST_CASE("all seven checks pass") {
    auto r = run_example();
    REQUIRE(r.checks.size() == 7);
    for (const auto& c : r.checks) {
        CAPTURE(c.id);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(r.pass);
}

TEST_CASE("larger field gives identical verdicts") {
    auto a = run_example();
    auto b = run_example({"2^6", false, 5});
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(b.field == "2^6");
}

TEST_CASE("perturbed slope fails check f") {
    auto r = run_example({"2^4", true, 5});
    CHECK_FALSE(r.pass);
    REQUIRE(!r.checks.empty());
    CHECK(r.checks.back().id == "f");
    CHECK_FALSE(r.checks.back().pass);
    CHECK(r.checks.size() == 6);
}

TEST_CASE("odd characteristic is rejected") { CHECK_THROWS_AS(run_example({"3^2", false, 5}), FieldError); }
