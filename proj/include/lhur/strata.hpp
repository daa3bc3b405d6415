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

#ifndef LHUR_STRATA_HPP
#define LHUR_STRATA_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace lhur {

/// Malformed graph JSON (missing keys, dangling ids, bad enum values).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A graph or Hurwitz datum that fails validation where validity is required.
class StrataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Regime { mixed, equicharacteristic };
enum class CoverType { artin_schreier, frobenius, etale };
/// Role of a source component: the cover type refined by exact / quasi-exact.
enum class Role { artin_schreier, etale, exact, quasi_exact };

std::string to_string(Regime r);
std::string to_string(CoverType t);
std::string to_string(Role r);
Regime parse_regime(const std::string& s);
CoverType parse_cover_type(const std::string& s);

/// Discrete data A = (h, g, N, Lambda, Xi) of a degree-p cover.
struct HurwitzData {
    int p = 2;
    int h = 0;
    int g = 0;
    std::vector<int> lambda;
    std::vector<int> xi;
    Regime regime = Regime::mixed;

    int N() const { return static_cast<int>(lambda.size()); }
    /// 2h - 2 = p(2g - 2) + sum(lambda_i + xi_i - 1), plus basic sanity.
    bool riemann_hurwitz() const;
};

struct SourceVertex {
    std::string id;
    int genus = 0;
    int level = 0;
    CoverType type = CoverType::frobenius;
    std::string image;  // target vertex
};

/// v1 is the upper end for non-horizontal edges.
struct SourceEdge {
    std::string id, v1, v2;
    int slope = 0;
    std::string image;  // target edge
};

struct TargetVertex {
    std::string id;
    int genus = 0;
    int level = 0;
};

struct TargetEdge {
    std::string id, v1, v2;
};

struct Marking {
    std::string vertex;  // source vertex
    int lambda = 1;
    int xi = 0;
    std::string image;  // target vertex
};

struct LevelGraph {
    int p = 2;
    Regime regime = Regime::mixed;
    std::vector<SourceVertex> vertices;
    std::vector<SourceEdge> edges;
    std::vector<TargetVertex> target_vertices;
    std::vector<TargetEdge> target_edges;
    std::vector<Marking> markings;

    int min_level() const;
    /// Sum of vertex genera plus first Betti number (-1 .. if disconnected, see validate).
    int source_genus() const;
    int target_genus() const;
    /// h and g from the graph, Lambda and Xi from the markings in order.
    HurwitzData hurwitz() const;
    const SourceVertex& vertex(const std::string& id) const;
    Role role(const SourceVertex& v) const;
};

LevelGraph parse_level_graph(const nlohmann::json& j);
nlohmann::json to_json(const LevelGraph& g);
std::string to_dot(const LevelGraph& g);

struct Violation {
    std::string rule;
    std::string where;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    /// Rescaling relations d(t)^kappa = s_i ... s_j, one per non-horizontal target edge.
    std::vector<std::string> relations;
    bool valid() const { return violations.empty(); }
};

ValidationReport validate(const LevelGraph& g);
/// Also checks that the graph realizes the given Hurwitz data.
ValidationReport validate(const LevelGraph& g, const HurwitzData& a);

struct ComponentContribution {
    std::string id;  // source vertex, or target vertex for etale components
    Role role;
    int level;
    int value;
};

struct StratumLedger {
    std::vector<ComponentContribution> components;
    std::map<int, int> per_level;
    int mod_as = 0;
    int mod_ex = 0;
    int mod_qu_ex = 0;
    int total = 0;
    int horizontal_target_edges = 0;  // #E_D^hor
    int exact_vertices = 0;           // #V_C^ex
    /// generic_dimension - #E_D^hor - #V_C^ex; meaningful for g = 0.
    int closed_form = 0;
    int monoid_rank = 0;
    bool free = false;
};

/// Throws StrataError on an invalid graph.
StratumLedger stratum_dimension(const LevelGraph& g);

struct MonoidRank {
    int rank = 0;
    bool free = false;
};
MonoidRank monoid_rank(const LevelGraph& g);

/// 3g - 3 + N (mixed); the Artin-Schreier moduli dimension of the generic
/// stratum (equicharacteristic), N - 3 + sum over ramified markings of
/// (xi + 1)/2 at p = 2.
int generic_dimension(const HurwitzData& a);

/// Isomorphism-invariant encoding. Markings keep their order.
std::string canonical_form(const LevelGraph& g);
/// Same graph with ids and list order rewritten canonically.
LevelGraph canonical_relabel(const LevelGraph& g);

bool two_level_no_horizontal(const LevelGraph& g);

/// All valid graphs with at most max_vertices source vertices, one per
/// isomorphism class, sorted by canonical form. Mixed regime, p = 2, g = 0.
std::vector<LevelGraph> enumerate_graphs(const HurwitzData& a, int max_vertices);
/// The two-level graphs without horizontal edges among enumerate_graphs.
std::vector<LevelGraph> enumerate_components(const HurwitzData& a, int max_vertices);

}  // namespace lhur

#endif  // LHUR_STRATA_HPP
