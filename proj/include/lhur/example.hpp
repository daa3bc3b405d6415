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

#ifndef LHUR_EXAMPLE_HPP
#define LHUR_EXAMPLE_HPP

#include <string>
#include <vector>

#include "lhur/strata.hpp"

namespace lhur {

/// Names of the built-in level graphs for degree-two covers of P^1 branched
/// over four points: "delta_1_0", "delta_1_00", "delta_1_0_00", "delta_00_0_0".
std::vector<std::string> example_graph_names();
LevelGraph example_graph(const std::string& name);

struct ExampleCheck {
    std::string id;     // "a" .. "g"
    std::string claim;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string field;
    std::vector<ExampleCheck> checks;  // stops after the first failure
    bool pass = false;
};

struct ExampleOptions {
    std::string field = "2^4";
    /// Negative control: raises the slope of the edge leaving the genus-one
    /// component in the first boundary graph, which check (f) must reject.
    bool perturb_slope = false;
    int max_vertices = 5;
};

/// Runs the seven checks of the four-point example in order. The field must
/// have characteristic 2.
ExampleReport run_example(const ExampleOptions& opt = {});

}  // namespace lhur

#endif  // LHUR_EXAMPLE_HPP
