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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lhur/strata.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    json j() const { return json::parse(out); }
};

Run run(const std::string& args, const std::string& input = "") {
    std::string cmd = std::string(LHUR_CLI) + " " + args;
    std::string tmp;
    if (!input.empty()) {
        tmp = "lhur_cli_input.json";
        std::ofstream(tmp) << input;
        cmd += " < " + tmp;
    }
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    if (!tmp.empty()) std::remove(tmp.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string graph(const std::string& name) { return std::string(LHUR_GRAPH_DIR) + "/" + name + ".json"; }

}  // namespace

TEST_CASE("tc output is exactly classification and result") {
    auto r = run("tc --field 2^2 --expr \"y*(y-1)\"");
    CHECK(r.code == 0);
    CHECK(r.j() == json{{"classification", "quasi-exact"}, {"result", "1"}});
    CHECK(run("tc --field 2^4 --expr \"y^2*(y-1)^2\"").j()["classification"] == "exact");
}

TEST_CASE("field defaults to the environment") {
    auto r = run("--format json quasi-exact \"y*(y-1)\"");
    CHECK(r.j()["constant"] == 1);
    setenv("LHUR_FIELD", "3", 1);
    CHECK(run("cartier --expr y^2").j()["result"] == "1");
    unsetenv("LHUR_FIELD");
}

TEST_CASE("exit codes") {
    CHECK(run("").code == 1);
    CHECK(run("loci formula --pattern 1,x").code == 1);
    CHECK(run("tc --expr \"y*(\"").code == 2);
    auto f = run("tc --field 6 --expr y");
    CHECK(f.code == 3);
    CHECK(f.j()["error"]["kind"] == "field");
    CHECK(run("strata dim", "{").code == 4);
    CHECK(run("strata dim", "{\"p\":2}").code == 4);
    CHECK(run("example6 --perturb-slope").code == 5);
}

TEST_CASE("strata subcommands") {
    auto d = run("strata dim --file " + graph("delta_1_0"));
    CHECK(d.code == 0);
    CHECK(d.j()["total"] == 1);
    CHECK(d.j()["monoid_rank"] == 1);
    auto m = run("strata monoid " + graph("delta_00_0_0"));
    CHECK(m.j() == json{{"free", true}, {"rank", 2}});
    CHECK(run("strata validate --dot " + graph("delta_1_0")).out.rfind("digraph", 0) == 0);

    // an invalid graph validates to false but cannot be measured
    json bad = json::parse(std::ifstream(graph("delta_1_0_00")));
    auto& slope = bad["source"]["edges"][0]["slope"];
    slope = slope.get<int>() + 2;
    auto v = run("strata validate", bad.dump());
    CHECK(v.code == 0);
    CHECK(v.j()["valid"] == false);
    CHECK_FALSE(v.j()["violations"].empty());
    CHECK(run("strata dim", bad.dump()).code == 5);
}

TEST_CASE("enumerated graphs round-trip through the CLI") {
    auto e = run("strata enumerate --h 1 --lambda 2,2,2,2");
    REQUIRE(e.code == 0);
    CHECK(e.j()["count"] == 4);
    for (const auto& g : e.j()["graphs"]) {
        auto r = run("strata dim", g.dump());
        CHECK(r.code == 0);
        CHECK(r.j()["total"] == 1);
        CHECK(lhur::canonical_form(lhur::parse_level_graph(g)) ==
              lhur::canonical_form(lhur::parse_level_graph(lhur::to_json(lhur::parse_level_graph(g)))));
    }
    CHECK(run("strata enumerate --h 1 --lambda 2,2,2,2 --all").j()["count"] == 10);
}

TEST_CASE("loci subcommands") {
    auto s = run("loci search --field 2^4 --pattern 1,1,1,1,-2 --kind quasi-exact --pin 1=0,2=1,4=inf");
    CHECK(s.j()["count"] == 14);
    auto t = run("loci tangent --field 2^4 --pattern 2,2,-2 --config 0,1,inf");
    CHECK(t.j()["dimension"] == 0);
    CHECK(t.j()["config"] == json::array({0, 1, "inf"}));
    CHECK(run("loci formula --pattern 1,1,1,1,-2 --kind quasi-exact").j()["dimension"] == 1);
    CHECK(run("loci search --pattern 1,1,1,1,-2 --pin 0,0,inf").code == 5);
}

TEST_CASE("ascover and example6") {
    auto a = run("ascover --expr x^3");
    CHECK(a.j()["conductors"] == json::array({4}));
    CHECK(a.j()["genus"] == 1);
    CHECK(a.j()["branch_points"] == json::array({"inf"}));
    auto iso = run("ascover --expr \"1/x+1/(x-a)\" --bind a=w --mark 1 --compare \"1/x+1/(x-w)\" --compare-mark 1");
    CHECK(iso.j()["isomorphic"] == true);
    auto ex = run("example6");
    CHECK(ex.code == 0);
    CHECK(ex.j()["pass"] == true);
    CHECK(ex.j()["checks"].size() == 7);
}
