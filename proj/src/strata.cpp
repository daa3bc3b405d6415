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

#include "lhur/strata.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "lhur/ffield.hpp"
#include "lhur/loci.hpp"

namespace lhur {

using nlohmann::json;

namespace {

template <class T>
const T* find_id(const std::vector<T>& xs, const std::string& id) {
    for (const auto& x : xs)
        if (x.id == id) return &x;
    return nullptr;
}

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n == 0) return false;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> root = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    std::size_t comps = n;
    for (auto [a, b] : edges) {
        auto ra = root(a), rb = root(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps == 1;
}

}  // namespace

std::string to_string(Regime r) { return r == Regime::mixed ? "mixed" : "equicharacteristic"; }

std::string to_string(CoverType t) {
    switch (t) {
        case CoverType::artin_schreier: return "artin_schreier";
        case CoverType::frobenius: return "frobenius";
        case CoverType::etale: return "etale";
    }
    return "";
}

std::string to_string(Role r) {
    switch (r) {
        case Role::artin_schreier: return "artin_schreier";
        case Role::etale: return "etale";
        case Role::exact: return "exact";
        case Role::quasi_exact: return "quasi_exact";
    }
    return "";
}

Regime parse_regime(const std::string& s) {
    if (s == "mixed") return Regime::mixed;
    if (s == "equicharacteristic" || s == "equichar") return Regime::equicharacteristic;
    throw SchemaError("unknown regime '" + s + "'");
}

CoverType parse_cover_type(const std::string& s) {
    if (s == "artin_schreier" || s == "AS") return CoverType::artin_schreier;
    if (s == "frobenius") return CoverType::frobenius;
    if (s == "etale") return CoverType::etale;
    throw SchemaError("unknown cover_type '" + s + "'");
}

bool HurwitzData::riemann_hurwitz() const {
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p)) || h < 0 || g < 0) return false;
    if (lambda.size() != xi.size()) return false;
    int sum = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || lambda[i] > p || xi[i] < 0) return false;
        if (regime == Regime::mixed && xi[i] != 0) return false;
        sum += lambda[i] + xi[i] - 1;
    }
    return 2 * h - 2 == p * (2 * g - 2) + sum;
}

// ---------------------------------------------------------------------------
// LevelGraph accessors

int LevelGraph::min_level() const {
    int m = 0;
    for (const auto& v : vertices) m = std::min(m, v.level);
    return m;
}

int LevelGraph::source_genus() const {
    int s = 0;
    for (const auto& v : vertices) s += v.genus;
    return s + static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
}

int LevelGraph::target_genus() const {
    int s = 0;
    for (const auto& v : target_vertices) s += v.genus;
    return s + static_cast<int>(target_edges.size()) - static_cast<int>(target_vertices.size()) + 1;
}

HurwitzData LevelGraph::hurwitz() const {
    HurwitzData a;
    a.p = p;
    a.regime = regime;
    a.h = source_genus();
    a.g = target_genus();
    for (const auto& m : markings) {
        a.lambda.push_back(m.lambda);
        a.xi.push_back(m.xi);
    }
    return a;
}

const SourceVertex& LevelGraph::vertex(const std::string& id) const {
    if (const auto* v = find_id(vertices, id)) return *v;
    throw SchemaError("unknown source vertex '" + id + "'");
}

Role LevelGraph::role(const SourceVertex& v) const {
    switch (v.type) {
        case CoverType::artin_schreier: return Role::artin_schreier;
        case CoverType::etale: return Role::etale;
        case CoverType::frobenius: break;
    }
    if (regime == Regime::mixed && v.level == min_level()) return Role::quasi_exact;
    return Role::exact;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

std::string id_of(const json& j, const char* key) {
    if (!j.contains(key)) throw SchemaError(std::string("missing key '") + key + "'");
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw SchemaError(std::string("key '") + key + "' must be a string or integer id");
}

int int_of(const json& j, const char* key, std::optional<int> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw SchemaError(std::string("missing key '") + key + "'");
    }
    if (!j.at(key).is_number_integer()) throw SchemaError(std::string("key '") + key + "' must be an integer");
    return j.at(key).get<int>();
}

const json& array_of(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw SchemaError(std::string("missing array '") + key + "'");
    return j.at(key);
}

template <class T>
void check_unique(const std::vector<T>& xs, const std::string& what) {
    std::set<std::string> seen;
    for (const auto& x : xs)
        if (!seen.insert(x.id).second) throw SchemaError("duplicate " + what + " id '" + x.id + "'");
}

}  // namespace

LevelGraph parse_level_graph(const json& j) {
    if (!j.is_object()) throw SchemaError("graph must be a JSON object");
    LevelGraph g;
    g.p = int_of(j, "p");
    if (g.p < 2 || !is_prime(static_cast<std::uint32_t>(g.p))) throw SchemaError("p must be prime");
    if (!j.contains("regime") || !j.at("regime").is_string()) throw SchemaError("missing key 'regime'");
    g.regime = parse_regime(j.at("regime").get<std::string>());
    if (!j.contains("source") || !j.contains("target")) throw SchemaError("missing 'source' or 'target'");
    const json& src = j.at("source");
    const json& tgt = j.at("target");
    for (const auto& v : array_of(src, "vertices")) {
        if (!v.contains("cover_type") || !v.at("cover_type").is_string()) throw SchemaError("missing key 'cover_type'");
        g.vertices.push_back({id_of(v, "id"), int_of(v, "genus", 0), int_of(v, "level"),
                              parse_cover_type(v.at("cover_type").get<std::string>()), id_of(v, "image")});
    }
    for (const auto& e : array_of(src, "edges"))
        g.edges.push_back({id_of(e, "id"), id_of(e, "v1"), id_of(e, "v2"), int_of(e, "slope"), id_of(e, "image")});
    for (const auto& v : array_of(tgt, "vertices"))
        g.target_vertices.push_back({id_of(v, "id"), int_of(v, "genus", 0), int_of(v, "level")});
    for (const auto& e : array_of(tgt, "edges")) g.target_edges.push_back({id_of(e, "id"), id_of(e, "v1"), id_of(e, "v2")});
    if (j.contains("markings"))
        for (const auto& m : array_of(j, "markings"))
            g.markings.push_back({id_of(m, "vertex"), int_of(m, "lambda"), int_of(m, "xi", 0), id_of(m, "image")});

    check_unique(g.vertices, "source vertex");
    check_unique(g.edges, "source edge");
    check_unique(g.target_vertices, "target vertex");
    check_unique(g.target_edges, "target edge");
    for (const auto& v : g.vertices)
        if (!find_id(g.target_vertices, v.image)) throw SchemaError("vertex '" + v.id + "' maps to unknown '" + v.image + "'");
    for (const auto& e : g.edges) {
        if (!find_id(g.vertices, e.v1) || !find_id(g.vertices, e.v2))
            throw SchemaError("edge '" + e.id + "' has an unknown endpoint");
        if (!find_id(g.target_edges, e.image)) throw SchemaError("edge '" + e.id + "' maps to unknown '" + e.image + "'");
    }
    for (const auto& e : g.target_edges)
        if (!find_id(g.target_vertices, e.v1) || !find_id(g.target_vertices, e.v2))
            throw SchemaError("target edge '" + e.id + "' has an unknown endpoint");
    for (const auto& m : g.markings) {
        if (!find_id(g.vertices, m.vertex)) throw SchemaError("marking on unknown vertex '" + m.vertex + "'");
        if (!find_id(g.target_vertices, m.image)) throw SchemaError("marking maps to unknown '" + m.image + "'");
    }
    return g;
}

json to_json(const LevelGraph& g) {
    json src_v = json::array(), src_e = json::array(), tgt_v = json::array(), tgt_e = json::array(), marks = json::array();
    for (const auto& v : g.vertices)
        src_v.push_back({{"id", v.id}, {"genus", v.genus}, {"level", v.level}, {"cover_type", to_string(v.type)},
                         {"image", v.image}});
    for (const auto& e : g.edges)
        src_e.push_back({{"id", e.id}, {"v1", e.v1}, {"v2", e.v2}, {"slope", e.slope}, {"image", e.image}});
    for (const auto& v : g.target_vertices) tgt_v.push_back({{"id", v.id}, {"genus", v.genus}, {"level", v.level}});
    for (const auto& e : g.target_edges) tgt_e.push_back({{"id", e.id}, {"v1", e.v1}, {"v2", e.v2}});
    for (const auto& m : g.markings)
        marks.push_back({{"vertex", m.vertex}, {"lambda", m.lambda}, {"xi", m.xi}, {"image", m.image}});
    return {{"p", g.p},
            {"regime", to_string(g.regime)},
            {"source", {{"vertices", src_v}, {"edges", src_e}}},
            {"target", {{"vertices", tgt_v}, {"edges", tgt_e}}},
            {"markings", marks}};
}

std::string to_dot(const LevelGraph& g) {
    std::ostringstream out;
    auto q = [](const std::string& s) { return "\"" + s + "\""; };
    std::map<int, std::vector<std::string>, std::greater<>> src_levels, tgt_levels;
    for (const auto& v : g.vertices) src_levels[v.level].push_back(v.id);
    for (const auto& v : g.target_vertices) tgt_levels[v.level].push_back(v.id);

    out << "digraph level_graph {\n  rankdir=TB;\n  subgraph cluster_source {\n    label=\"source\";\n";
    for (const auto& [lv, ids] : src_levels) {
        out << "    { rank=same;";
        for (const auto& id : ids) {
            const auto& v = g.vertex(id);
            out << " " << q("s:" + id) << " [label=\"" << id << "\\ng=" << v.genus << "\\n" << to_string(g.role(v))
                << "\"];";
        }
        out << " }  // level " << lv << "\n";
    }
    for (const auto& e : g.edges) {
        out << "    " << q("s:" + e.v1) << " -> " << q("s:" + e.v2) << " [label=\"" << e.slope << "\"";
        if (g.vertex(e.v1).level == g.vertex(e.v2).level) out << ", dir=none";
        out << "];\n";
    }
    for (std::size_t i = 0; i < g.markings.size(); ++i) {
        const auto& m = g.markings[i];
        std::string node = "m" + std::to_string(i + 1);
        out << "    " << q(node) << " [shape=plaintext, label=\"" << m.xi << "\"];\n";
        out << "    " << q("s:" + m.vertex) << " -> " << q(node) << " [dir=none];\n";
    }
    out << "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
    for (const auto& [lv, ids] : tgt_levels) {
        out << "    { rank=same;";
        for (const auto& id : ids) out << " " << q("t:" + id) << " [label=\"" << id << "\"];";
        out << " }  // level " << lv << "\n";
    }
    for (const auto& e : g.target_edges) out << "    " << q("t:" + e.v1) << " -> " << q("t:" + e.v2) << " [dir=none];\n";
    out << "  }\n}\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Order of the component form at each special point of a Frobenius vertex:
// slope + (p-1) at a downward edge, (p-1) - slope at an upward edge,
// p-1 at a horizontal edge, lambda + xi - 1 at a marking.
std::vector<int> frobenius_orders(const LevelGraph& g, const SourceVertex& v) {
    const int p = g.p;
    std::vector<int> orders;
    for (const auto& e : g.edges) {
        for (const std::string* end : {&e.v1, &e.v2}) {
            if (*end != v.id) continue;
            const bool horizontal = g.vertex(e.v1).level == g.vertex(e.v2).level;
            if (horizontal) orders.push_back(p - 1);
            else if (end == &e.v1) orders.push_back(e.slope + (p - 1));
            else orders.push_back((p - 1) - e.slope);
        }
    }
    for (const auto& m : g.markings)
        if (m.vertex == v.id) orders.push_back(m.lambda + m.xi - 1);
    return orders;
}

// Downward slopes at an AS vertex, with wild markings contributing xi.
std::vector<int> as_slopes(const LevelGraph& g, const SourceVertex& v) {
    std::vector<int> out;
    for (const auto& e : g.edges)
        if (e.v1 == v.id && g.vertex(e.v2).level < v.level) out.push_back(e.slope);
    for (const auto& m : g.markings)
        if (m.vertex == v.id && m.lambda == g.p) out.push_back(m.xi);
    return out;
}

int incidences(const LevelGraph& g, const std::string& id) {
    int n = 0;
    for (const auto& e : g.edges) n += (e.v1 == id) + (e.v2 == id);
    return n;
}

int target_incidences(const LevelGraph& g, const std::string& id) {
    int n = 0;
    for (const auto& e : g.target_edges) n += (e.v1 == id) + (e.v2 == id);
    return n;
}

bool horizontal(const LevelGraph& g, const SourceEdge& e) { return g.vertex(e.v1).level == g.vertex(e.v2).level; }

// Ramification index of the cover at the node.
int multiplicity(const LevelGraph& g, const SourceEdge& e) {
    const auto& a = g.vertex(e.v1);
    const auto& b = g.vertex(e.v2);
    return (horizontal(g, e) && a.type != CoverType::frobenius && b.type != CoverType::frobenius) ? 1 : g.p;
}

bool references_ok(const LevelGraph& g, ValidationReport& r) {
    auto bad = [&](const std::string& where, const std::string& msg) { r.violations.push_back({"reference", where, msg}); };
    for (const auto& v : g.vertices)
        if (!find_id(g.target_vertices, v.image)) bad(v.id, "image '" + v.image + "' is not a target vertex");
    for (const auto& e : g.edges) {
        if (!find_id(g.vertices, e.v1) || !find_id(g.vertices, e.v2)) bad(e.id, "unknown endpoint");
        if (!find_id(g.target_edges, e.image)) bad(e.id, "image '" + e.image + "' is not a target edge");
    }
    for (const auto& e : g.target_edges)
        if (!find_id(g.target_vertices, e.v1) || !find_id(g.target_vertices, e.v2)) bad(e.id, "unknown endpoint");
    for (std::size_t i = 0; i < g.markings.size(); ++i) {
        const auto& m = g.markings[i];
        if (!find_id(g.vertices, m.vertex) || !find_id(g.target_vertices, m.image))
            bad("marking " + std::to_string(i + 1), "unknown vertex");
    }
    return r.violations.empty();
}

}  // namespace

ValidationReport validate(const LevelGraph& g) {
    ValidationReport r;
    auto fail = [&](const std::string& rule, const std::string& where, const std::string& msg) {
        r.violations.push_back({rule, where, msg});
    };
    const int p = g.p;
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) {
        fail("p", "graph", "p = " + std::to_string(p) + " is not prime");
        return r;
    }
    if (g.vertices.empty() || g.target_vertices.empty()) {
        fail("structure", "graph", "source and target need at least one vertex");
        return r;
    }
    if (!references_ok(g, r)) return r;

    // Levels
    const int L = -g.min_level();
    std::set<int> src_levels, tgt_levels;
    for (const auto& v : g.vertices) src_levels.insert(v.level);
    for (const auto& v : g.target_vertices) tgt_levels.insert(v.level);
    for (int lv = 0; lv >= -L; --lv)
        if (!src_levels.count(lv)) fail("levels", "graph", "level " + std::to_string(lv) + " is empty");
    if (*src_levels.rbegin() != 0) fail("levels", "graph", "the top level must be 0");
    if (src_levels != tgt_levels) fail("levels", "graph", "source and target use different level sets");
    for (const auto& v : g.vertices) {
        const auto* t = find_id(g.target_vertices, v.image);
        if (t->level != v.level) fail("levels", v.id, "level differs from its image " + t->id);
        const bool top = v.level == 0;
        if (top && v.type == CoverType::frobenius) fail("cover_type", v.id, "frobenius component at the top level");
        if (!top && v.type != CoverType::frobenius)
            fail("cover_type", v.id, to_string(v.type) + " component below the top level");
        if (v.genus < 0) fail("genus", v.id, "negative genus");
        if (v.type != CoverType::artin_schreier && v.genus != t->genus)
            fail("genus", v.id, "genus differs from the image " + t->id);
    }
    for (const auto& t : g.target_vertices)
        if (t.genus < 0) fail("genus", t.id, "negative genus");

    // Degree over each target vertex
    for (const auto& t : g.target_vertices) {
        int deg = 0;
        std::set<CoverType> types;
        for (const auto& v : g.vertices)
            if (v.image == t.id) {
                deg += v.type == CoverType::etale ? 1 : p;
                types.insert(v.type);
            }
        if (deg != p) fail("degree", t.id, "degree over this component is " + std::to_string(deg));
        if (types.size() > 1) fail("degree", t.id, "mixed cover types over one component");
    }

    // Edges
    for (const auto& e : g.edges) {
        const auto& a = g.vertex(e.v1);
        const auto& b = g.vertex(e.v2);
        const auto* te = find_id(g.target_edges, e.image);
        if (a.level == b.level) {
            if (e.slope != 0) fail("slope", e.id, "horizontal edge with slope " + std::to_string(e.slope));
        } else {
            if (a.level < b.level) fail("orientation", e.id, "v1 must be the upper end");
            if (e.slope <= 0) fail("slope", e.id, "non-horizontal edge needs a positive slope");
        }
        const bool same = te->v1 == a.image && te->v2 == b.image;
        const bool swapped = te->v2 == a.image && te->v1 == b.image;
        if (!(same || (swapped && a.level == b.level))) fail("edge_image", e.id, "image does not join the images of its ends");
        for (const auto* v : {&a, &b})
            if (v->type == CoverType::etale && a.level != b.level)
                fail("etale", e.id, "etale sheet " + v->id + " on a non-horizontal edge");
        for (const auto* v : {&a, &b})
            if (v->type == CoverType::frobenius && a.level != b.level && e.slope % p == 0)
                fail("frobenius_slope", e.id, "slope divisible by p at frobenius component " + v->id);
    }
    for (const auto& t : g.target_edges) {
        int mult = 0;
        for (const auto& e : g.edges)
            if (e.image == t.id) mult += multiplicity(g, e);
        if (mult != p) fail("multiplicity", t.id, "preimage multiplicities sum to " + std::to_string(mult));
    }

    // Markings
    for (std::size_t i = 0; i < g.markings.size(); ++i) {
        const auto& m = g.markings[i];
        const std::string where = "marking " + std::to_string(i + 1);
        const auto& v = g.vertex(m.vertex);
        if (m.image != v.image) fail("marking_image", where, "image differs from the image of " + v.id);
        if (m.xi < 0) fail("marking", where, "negative xi");
        if (g.regime == Regime::mixed && m.xi != 0) fail("mixed_xi", where, "mixed regime requires xi = 0");
        if (m.lambda == 1) {
            if (v.type == CoverType::frobenius) fail("marking", where, "unramified marking on a frobenius component");
            if (m.xi != 0) fail("marking", where, "unramified marking with xi > 0");
        } else if (m.lambda == p) {
            if (v.type == CoverType::etale) fail("marking", where, "ramified marking on an etale sheet");
            if (g.regime == Regime::mixed && v.type == CoverType::frobenius && v.level != g.min_level())
                fail("mixed_minimal_level", where, "markings on frobenius components must sit at the minimal level");
        } else {
            fail("marking", where, "lambda must be 1 or p");
        }
    }

    // Artin-Schreier vertices: conductor rules and Riemann-Hurwitz.
    for (const auto& v : g.vertices) {
        if (v.type != CoverType::artin_schreier) continue;
        const auto* t = find_id(g.target_vertices, v.image);
        int sum_e = 0;
        auto slopes = as_slopes(g, v);
        if (slopes.empty()) fail("as_balance", v.id, "Artin-Schreier component without branch points");
        for (int l : slopes) {
            if (l <= 0 || l % (p - 1) != 0 || (l / (p - 1)) % p == 0)
                fail("as_slope", v.id, "slope " + std::to_string(l) + " is not (e-1)(p-1) with e != 1 mod p");
            else
                sum_e += l / (p - 1) + 1;
        }
        const int rhs = 2 * v.genus - 2 - p * (2 * t->genus - 2);
        if (rhs % (p - 1) != 0 || sum_e != rhs / (p - 1))
            fail("as_balance", v.id,
                 "sum of conductors " + std::to_string(sum_e) + " does not match genus " + std::to_string(v.genus));
    }
    // Frobenius vertices: degree of the component form.
    for (const auto& v : g.vertices) {
        if (v.type != CoverType::frobenius) continue;
        auto orders = frobenius_orders(g, v);
        const int sum = std::accumulate(orders.begin(), orders.end(), 0);
        if (sum != (p - 1) * (2 - 2 * v.genus))
            fail("frobenius_balance", v.id, "orders sum to " + std::to_string(sum) + ", expected " +
                                                std::to_string((p - 1) * (2 - 2 * v.genus)));
    }
    // Stability of source components.
    for (const auto& v : g.vertices) {
        int special = incidences(g, v.id);
        for (const auto& m : g.markings)
            if (m.vertex == v.id) special += (m.lambda == 1 && v.type == CoverType::artin_schreier) ? p : 1;
        if (2 * v.genus - 2 + special <= 0) fail("stability", v.id, "unstable component");
    }

    // Connectivity.
    {
        std::map<std::string, std::size_t> idx, tidx;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = i;
        for (std::size_t i = 0; i < g.target_vertices.size(); ++i) tidx[g.target_vertices[i].id] = i;
        std::vector<std::pair<std::size_t, std::size_t>> se, te;
        for (const auto& e : g.edges) se.push_back({idx[e.v1], idx[e.v2]});
        for (const auto& e : g.target_edges) te.push_back({tidx[e.v1], tidx[e.v2]});
        if (!connected(g.vertices.size(), se)) fail("connected", "source", "source graph is disconnected");
        if (!connected(g.target_vertices.size(), te)) fail("connected", "target", "target graph is disconnected");
    }

    HurwitzData a = g.hurwitz();
    if (a.g >= 0 && a.h >= 0 && !a.riemann_hurwitz())
        fail("riemann_hurwitz", "graph",
             "h = " + std::to_string(a.h) + ", g = " + std::to_string(a.g) + " violate Riemann-Hurwitz");

    // Rescaling relations, one monoid word per non-horizontal target edge.
    for (const auto& t : g.target_edges) {
        const auto* a1 = find_id(g.target_vertices, t.v1);
        const auto* a2 = find_id(g.target_vertices, t.v2);
        if (a1->level == a2->level) continue;
        const int hi = std::max(a1->level, a2->level), lo = std::min(a1->level, a2->level);
        for (const auto& e : g.edges) {
            if (e.image != t.id) continue;
            std::string word;
            for (int i = -hi + 1; i <= -lo; ++i) word += (word.empty() ? "s" : "*s") + std::to_string(i);
            r.relations.push_back("d(" + t.id + ")^" + std::to_string(e.slope) + " = " + word);
        }
    }
    return r;
}

ValidationReport validate(const LevelGraph& g, const HurwitzData& a) {
    ValidationReport r = validate(g);
    if (!r.valid() && r.violations.front().rule == "reference") return r;
    auto fail = [&](const std::string& msg) { r.violations.push_back({"hurwitz_data", "graph", msg}); };
    if (!a.riemann_hurwitz()) fail("Hurwitz data violate Riemann-Hurwitz");
    HurwitzData b = g.hurwitz();
    if (a.p != b.p) fail("p differs");
    if (a.regime != b.regime) fail("regime differs");
    if (a.h != b.h) fail("source genus " + std::to_string(b.h) + " != h = " + std::to_string(a.h));
    if (a.g != b.g) fail("target genus " + std::to_string(b.g) + " != g = " + std::to_string(a.g));
    if (a.lambda != b.lambda || a.xi != b.xi) fail("markings do not match (Lambda, Xi)");
    return r;
}

// ---------------------------------------------------------------------------
// Ledger

int generic_dimension(const HurwitzData& a) {
    if (!a.riemann_hurwitz()) throw StrataError("Hurwitz data violate Riemann-Hurwitz");
    if (a.regime == Regime::mixed) return 3 * a.g - 3 + a.N();
    if (a.g != 0) throw StrataError("equicharacteristic generic dimension needs g = 0");
    // Artin-Schreier covers of P^1 with conductors e = xi/(p-1) + 1 at the
    // ramified markings and the unramified markings as extra points.
    const int p = a.p;
    int n = 0, floors = 0;
    for (std::size_t i = 0; i < a.lambda.size(); ++i) {
        if (a.lambda[i] == 1) {
            ++n;
            continue;
        }
        if (a.lambda[i] != p || a.xi[i] % (p - 1) != 0 || a.xi[i] == 0 || (a.xi[i] / (p - 1)) % p == 0)
            throw StrataError("marking " + std::to_string(i + 1) + " has no Artin-Schreier conductor");
        floors += (a.xi[i] / (p - 1)) / p;
    }
    return 2 * a.h / (p - 1) + n - 1 - floors;
}

MonoidRank monoid_rank(const LevelGraph& g) {
    auto r = validate(g);
    if (!r.valid()) throw StrataError("invalid graph: " + r.violations.front().rule + " at " + r.violations.front().where);
    std::set<std::string> hor;
    for (const auto& e : g.edges)
        if (e.slope == 0) hor.insert(e.image);
    int ex = 0;
    for (const auto& v : g.vertices) ex += g.role(v) == Role::exact;
    return {static_cast<int>(hor.size()) + ex + (g.regime == Regime::mixed ? 1 : 0), g.p == 2};
}

StratumLedger stratum_dimension(const LevelGraph& g) {
    auto r = validate(g);
    if (!r.valid()) throw StrataError("invalid graph: " + r.violations.front().rule + " at " + r.violations.front().where);
    const int p = g.p;
    StratumLedger led;
    std::set<std::string> hor;
    for (const auto& e : g.edges)
        if (e.slope == 0) hor.insert(e.image);
    led.horizontal_target_edges = static_cast<int>(hor.size());

    for (const auto& v : g.vertices) {
        const Role role = g.role(v);
        int value = 0;
        switch (role) {
            case Role::artin_schreier: {
                // Etale half-edges of the image: horizontal target edges and
                // unramified markings.
                int n_et = 0;
                for (const auto& t : g.target_edges) {
                    const auto* a1 = find_id(g.target_vertices, t.v1);
                    const auto* a2 = find_id(g.target_vertices, t.v2);
                    if (a1->level == a2->level) n_et += (t.v1 == v.image) + (t.v2 == v.image);
                }
                for (const auto& m : g.markings) n_et += m.vertex == v.id && m.lambda == 1;
                int floors = 0;
                for (int l : as_slopes(g, v)) floors += l / (p * (p - 1));
                value = 2 * v.genus / (p - 1) + n_et - 1 - floors;
                led.mod_as += value;
                break;
            }
            case Role::etale:
                continue;  // counted once per target component below
            case Role::exact:
            case Role::quasi_exact: {
                auto orders = frobenius_orders(g, v);
                value = dimension_formula(orders, p, role == Role::exact ? LocusKind::exact : LocusKind::quasi_exact);
                (role == Role::exact ? led.mod_ex : led.mod_qu_ex) += value;
                led.exact_vertices += role == Role::exact;
                break;
            }
        }
        led.components.push_back({v.id, role, v.level, value});
        led.per_level[v.level] += value;
    }
    for (const auto& t : g.target_vertices) {
        bool etale = false;
        for (const auto& v : g.vertices) etale |= v.image == t.id && v.type == CoverType::etale;
        if (!etale) continue;
        int h = target_incidences(g, t.id);
        for (const auto& m : g.markings) h += m.image == t.id;
        const int value = h - 3;
        led.mod_as += value;
        led.components.push_back({t.id, Role::etale, t.level, value});
        led.per_level[t.level] += value;
    }
    led.total = led.mod_as + led.mod_ex + led.mod_qu_ex;
    led.closed_form = generic_dimension(g.hurwitz()) - led.horizontal_target_edges - led.exact_vertices;
    auto mr = monoid_rank(g);
    led.monoid_rank = mr.rank;
    led.free = mr.free;
    return led;
}

// ---------------------------------------------------------------------------
// Canonical labeling by individualization and refinement

namespace {

struct ColoredGraph {
    std::vector<std::string> label;
    std::vector<std::vector<std::size_t>> adj;  // multigraph, symmetric

    std::size_t add(std::string l) {
        label.push_back(std::move(l));
        adj.emplace_back();
        return label.size() - 1;
    }
    void link(std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

std::vector<int> refine(const ColoredGraph& g, std::vector<int> color) {
    const std::size_t n = color.size();
    std::size_t classes = std::set<int>(color.begin(), color.end()).size();
    for (;;) {
        std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> nb;
            for (auto u : g.adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            sig[v] = {{color[v], std::move(nb)}, v};
        }
        std::vector<std::pair<int, std::vector<int>>> keys;
        for (auto& s : sig) keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (std::size_t v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (keys.size() == classes) return color;
        classes = keys.size();
    }
}

struct Labeling {
    std::string code;
    std::vector<std::size_t> order;  // order[pos] = node
};

void search(const ColoredGraph& g, std::vector<int> color, Labeling& best, bool& have) {
    color = refine(g, std::move(color));
    const std::size_t n = color.size();
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& [c, vs] : cells)
        if (vs.size() > 1) {
            target = &vs;
            break;
        }
    if (!target) {
        Labeling l;
        l.order.resize(n);
        for (std::size_t v = 0; v < n; ++v) l.order[color[v]] = v;
        std::ostringstream code;
        for (std::size_t pos = 0; pos < n; ++pos) {
            std::size_t v = l.order[pos];
            std::vector<int> nb;
            for (auto u : g.adj[v]) nb.push_back(color[u]);
            std::sort(nb.begin(), nb.end());
            code << g.label[v] << '[';
            for (int x : nb) code << x << ',';
            code << "];";
        }
        l.code = code.str();
        if (!have || l.code < best.code) {
            best = std::move(l);
            have = true;
        }
        return;
    }
    for (std::size_t v : *target) {
        std::vector<int> c2(n);
        for (std::size_t u = 0; u < n; ++u) c2[u] = 2 * color[u] + (u == v ? 0 : 1);
        search(g, c2, best, have);
    }
}

struct Encoded {
    ColoredGraph cg;
    std::vector<std::size_t> sv, se, tv, te;  // node ids per object
};

Encoded encode(const LevelGraph& g) {
    Encoded e;
    auto& cg = e.cg;
    std::map<std::string, std::size_t> sv, tv, te;
    for (const auto& v : g.target_vertices) {
        tv[v.id] = cg.add("T" + std::to_string(v.level) + "g" + std::to_string(v.genus));
        e.tv.push_back(tv[v.id]);
    }
    for (const auto& t : g.target_edges) {
        te[t.id] = cg.add("D");
        e.te.push_back(te[t.id]);
        cg.link(te[t.id], tv.at(t.v1));
        cg.link(te[t.id], tv.at(t.v2));
    }
    for (const auto& v : g.vertices) {
        sv[v.id] = cg.add("S" + std::to_string(v.level) + "g" + std::to_string(v.genus) + to_string(v.type));
        e.sv.push_back(sv[v.id]);
        cg.link(sv[v.id], tv.at(v.image));
    }
    for (const auto& x : g.edges) {
        std::size_t n = cg.add("E" + std::to_string(x.slope));
        e.se.push_back(n);
        cg.link(n, sv.at(x.v1));
        cg.link(n, sv.at(x.v2));
        cg.link(n, te.at(x.image));
    }
    // Markings are ordered, so each carries its index. An unramified marking
    // on an etale component is attached to the target only: its preimages
    // lie on every sheet.
    for (std::size_t i = 0; i < g.markings.size(); ++i) {
        const auto& m = g.markings[i];
        std::size_t n = cg.add("M" + std::to_string(i) + "l" + std::to_string(m.lambda) + "x" + std::to_string(m.xi));
        cg.link(n, tv.at(m.image));
        if (g.vertex(m.vertex).type != CoverType::etale) cg.link(n, sv.at(m.vertex));
    }
    return e;
}

Labeling canonical_labeling(const ColoredGraph& cg) {
    std::vector<std::string> keys = cg.label;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> color(cg.label.size());
    for (std::size_t v = 0; v < color.size(); ++v)
        color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), cg.label[v]) - keys.begin());
    Labeling best;
    bool have = false;
    search(cg, color, best, have);
    return best;
}

}  // namespace

std::string canonical_form(const LevelGraph& g) {
    std::ostringstream head;
    head << "p" << g.p << to_string(g.regime) << "|";
    return head.str() + canonical_labeling(encode(g).cg).code;
}

LevelGraph canonical_relabel(const LevelGraph& g) {
    Encoded e = encode(g);
    Labeling l = canonical_labeling(e.cg);
    std::vector<std::size_t> pos(l.order.size());
    for (std::size_t i = 0; i < l.order.size(); ++i) pos[l.order[i]] = i;
    auto sorted_by_pos = [&](const std::vector<std::size_t>& nodes) {
        std::vector<std::size_t> idx(nodes.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return pos[nodes[a]] < pos[nodes[b]]; });
        return idx;
    };
    LevelGraph out;
    out.p = g.p;
    out.regime = g.regime;
    std::map<std::string, std::string> sv, tv, te;
    auto tvi = sorted_by_pos(e.tv);
    for (std::size_t k = 0; k < tvi.size(); ++k) tv[g.target_vertices[tvi[k]].id] = "d" + std::to_string(k);
    auto tei = sorted_by_pos(e.te);
    for (std::size_t k = 0; k < tei.size(); ++k) te[g.target_edges[tei[k]].id] = "t" + std::to_string(k);
    auto svi = sorted_by_pos(e.sv);
    for (std::size_t k = 0; k < svi.size(); ++k) sv[g.vertices[svi[k]].id] = "v" + std::to_string(k);
    auto sei = sorted_by_pos(e.se);

    for (auto i : tvi) {
        auto v = g.target_vertices[i];
        v.id = tv[v.id];
        out.target_vertices.push_back(v);
    }
    for (auto i : tei) {
        auto t = g.target_edges[i];
        t = {te[t.id], tv[t.v1], tv[t.v2]};
        out.target_edges.push_back(t);
    }
    for (auto i : svi) {
        auto v = g.vertices[i];
        v.id = sv[v.id];
        v.image = tv[v.image];
        out.vertices.push_back(v);
    }
    for (std::size_t k = 0; k < sei.size(); ++k) {
        auto x = g.edges[sei[k]];
        out.edges.push_back({"e" + std::to_string(k), sv[x.v1], sv[x.v2], x.slope, te[x.image]});
    }
    // Sheets of an etale component are interchangeable; an unramified marking
    // there goes on the first sheet in canonical order.
    for (const auto& m : g.markings) {
        Marking m2{sv[m.vertex], m.lambda, m.xi, tv[m.image]};
        if (g.vertex(m.vertex).type == CoverType::etale)
            for (const auto& v : out.vertices)
                if (v.image == m2.image) {
                    m2.vertex = v.id;
                    break;
                }
        out.markings.push_back(m2);
    }
    return out;
}

bool two_level_no_horizontal(const LevelGraph& g) {
    if (g.min_level() != -1) return false;
    for (const auto& e : g.edges)
        if (g.vertex(e.v1).level == g.vertex(e.v2).level) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration (mixed regime, p = 2, g = 0)

namespace {

struct Shape {
    int t;                                                  // target vertices
    std::vector<std::pair<int, int>> tree;                  // target edges
    std::vector<int> level;                                 // per target vertex, non-increasing
    std::vector<CoverType> type;                            // per target vertex
};

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int t) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (t == 1) return {{}};
    if (t == 2) return {{{0, 1}}};
    std::vector<int> seq(t - 2, 0);
    for (;;) {
        std::vector<int> degree(t, 1);
        for (int x : seq) ++degree[x];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            for (int leaf = 0; leaf < t; ++leaf)
                if (degree[leaf] == 1) {
                    edges.push_back({leaf, x});
                    --degree[leaf];
                    --degree[x];
                    break;
                }
        }
        int u = -1, w = -1;
        for (int v = 0; v < t; ++v)
            if (degree[v] == 1) (u < 0 ? u : w) = v;
        edges.push_back({u, w});
        out.push_back(edges);
        int i = t - 3;
        while (i >= 0 && ++seq[i] == t) seq[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

// Non-increasing surjections {0..t-1} -> {0, -1, .., -L}.
std::vector<std::vector<int>> level_patterns(int t) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << (t - 1)); ++mask) {
        std::vector<int> lv(t, 0);
        for (int i = 1; i < t; ++i) lv[i] = lv[i - 1] - ((mask >> (i - 1)) & 1);
        out.push_back(lv);
    }
    return out;
}

// All ways to write total as an ordered sum of `parts` non-negative integers.
void compositions(int total, int parts, std::vector<int>& cur, const std::function<void()>& f) {
    if (parts == 0) {
        if (total == 0) f();
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        f();
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, cur, f);
        cur.pop_back();
    }
}

// Distributes the labeled markings `labels` into boxes with the given sizes.
void distribute(const std::vector<int>& labels, const std::vector<int>& sizes, std::vector<int>& box_of,
                const std::function<void()>& f, std::size_t i = 0) {
    if (i == labels.size()) {
        f();
        return;
    }
    std::vector<int> used(sizes.size(), 0);
    for (std::size_t k = 0; k < i; ++k) ++used[box_of[labels[k]]];
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (used[b] >= sizes[b]) continue;
        box_of[labels[i]] = static_cast<int>(b);
        distribute(labels, sizes, box_of, f, i + 1);
    }
}

class Enumerator {
public:
    Enumerator(const HurwitzData& a, int max_vertices) : a_(a), max_(max_vertices) {
        for (int i = 0; i < a.N(); ++i) (a.lambda[i] == 2 ? ram_ : unram_).push_back(i);
    }

    std::map<std::string, LevelGraph> run_size(int t) const {
        std::map<std::string, LevelGraph> found;
        for (const auto& tree : labeled_trees(t))
            for (const auto& lv : level_patterns(t)) {
                const int L = -lv.back();
                if (!ram_.empty() && L == 0) continue;
                int top = 0;
                while (top < t && lv[top] == 0) ++top;
                // The first `as` top vertices are Artin-Schreier, the rest etale.
                for (int as = 0; as <= top; ++as) {
                    Shape s{t, tree, lv, std::vector<CoverType>(t, CoverType::frobenius)};
                    for (int i = 0; i < top; ++i) s.type[i] = i < as ? CoverType::artin_schreier : CoverType::etale;
                    shape(s, found);
                }
            }
        return found;
    }

private:
    void shape(const Shape& s, std::map<std::string, LevelGraph>& found) const {
        int nsrc = 0;
        for (auto ty : s.type) nsrc += ty == CoverType::etale ? 2 : 1;
        if (nsrc > max_) return;
        std::vector<int> et_et;
        for (std::size_t k = 0; k < s.tree.size(); ++k) {
            auto [a, b] = s.tree[k];
            const bool hor = s.level[a] == s.level[b];
            const int up = s.level[a] > s.level[b] ? a : b;
            if (!hor && s.type[up] == CoverType::etale) return;
            if (hor && s.type[a] == CoverType::etale && s.type[b] == CoverType::etale) et_et.push_back(static_cast<int>(k));
        }
        for (int twist = 0; twist < (1 << et_et.size()); ++twist) build(s, et_et, twist, found);
    }

    void build(const Shape& s, const std::vector<int>& et_et, int twist, std::map<std::string, LevelGraph>& found) const {
        LevelGraph g;
        g.p = 2;
        g.regime = Regime::mixed;
        std::vector<std::vector<std::string>> over(s.t);
        for (int i = 0; i < s.t; ++i) {
            const std::string d = "d" + std::to_string(i);
            g.target_vertices.push_back({d, 0, s.level[i]});
            const int copies = s.type[i] == CoverType::etale ? 2 : 1;
            for (int c = 0; c < copies; ++c) {
                std::string id = "v" + std::to_string(i) + (copies == 2 ? std::string(1, static_cast<char>('a' + c)) : "");
                g.vertices.push_back({id, 0, s.level[i], s.type[i], d});
                over[i].push_back(id);
            }
        }
        int ne = 0;
        std::vector<std::size_t> unknown;  // indices of non-horizontal source edges
        for (std::size_t k = 0; k < s.tree.size(); ++k) {
            auto [a, b] = s.tree[k];
            if (s.level[a] < s.level[b]) std::swap(a, b);
            const std::string t = "t" + std::to_string(k);
            g.target_edges.push_back({t, "d" + std::to_string(a), "d" + std::to_string(b)});
            auto add = [&](const std::string& x, const std::string& y) {
                g.edges.push_back({"e" + std::to_string(ne++), x, y, 0, t});
            };
            if (s.level[a] != s.level[b]) {
                unknown.push_back(g.edges.size());
                add(over[a][0], over[b][0]);
            } else if (s.level[a] < 0) {
                add(over[a][0], over[b][0]);
            } else {
                const auto& A = over[a];
                const auto& B = over[b];
                if (A.size() == 1 && B.size() == 1) {
                    add(A[0], B[0]);
                    add(A[0], B[0]);
                } else if (A.size() == 1 || B.size() == 1) {
                    const auto& one = A.size() == 1 ? A : B;
                    const auto& two = A.size() == 1 ? B : A;
                    add(one[0], two[0]);
                    add(one[0], two[1]);
                } else {
                    auto pos = std::find(et_et.begin(), et_et.end(), static_cast<int>(k)) - et_et.begin();
                    const bool crossed = (twist >> pos) & 1;
                    add(A[0], B[crossed ? 1 : 0]);
                    add(A[1], B[crossed ? 0 : 1]);
                }
            }
        }
        {
            std::map<std::string, std::size_t> idx;
            for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = i;
            std::vector<std::pair<std::size_t, std::size_t>> se;
            for (const auto& e : g.edges) se.push_back({idx[e.v1], idx[e.v2]});
            if (!connected(g.vertices.size(), se)) return;
        }
        const int b1 = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + 1;
        const int genus_left = a_.h - b1;
        std::vector<std::size_t> as_idx, ram_boxes, unram_boxes;
        const int minl = s.level.back();
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const auto& v = g.vertices[i];
            if (v.type == CoverType::artin_schreier) as_idx.push_back(i);
            if (v.type == CoverType::frobenius && v.level == minl) ram_boxes.push_back(i);
        }
        // Unramified markings go to Artin-Schreier vertices or to the first
        // sheet of an etale component.
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            const auto& v = g.vertices[i];
            if (v.type == CoverType::artin_schreier || (v.type == CoverType::etale && v.id.back() == 'a'))
                unram_boxes.push_back(i);
        }
        if (genus_left < 0 || (as_idx.empty() && genus_left > 0)) return;
        if (!ram_.empty() && ram_boxes.empty()) return;
        if (!unram_.empty() && unram_boxes.empty()) return;

        std::vector<int> genera, rcount, ucount;
        compositions(genus_left, static_cast<int>(as_idx.size()), genera, [&] {
            for (std::size_t k = 0; k < as_idx.size(); ++k) g.vertices[as_idx[k]].genus = genera[k];
            compositions(static_cast<int>(ram_.size()), static_cast<int>(ram_boxes.size()), rcount, [&] {
                compositions(static_cast<int>(unram_.size()), static_cast<int>(unram_boxes.size()), ucount, [&] {
                    LevelGraph h = g;
                    if (!solve_slopes(h, unknown, ram_boxes, rcount)) return;
                    try {
                        label(h, ram_boxes, rcount, unram_boxes, ucount, found);
                    } catch (const Invalid&) {
                    }
                });
            });
        });
    }

    // Fixes the slopes of non-horizontal edges from the vertex balances,
    // peeling vertices with a single undetermined edge.
    static bool solve_slopes(LevelGraph& g, const std::vector<std::size_t>& unknown,
                             const std::vector<std::size_t>& ram_boxes, const std::vector<int>& rcount) {
        std::map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = i;
        const std::size_t nv = g.vertices.size();
        std::vector<int> marks(nv, 0);
        for (std::size_t k = 0; k < ram_boxes.size(); ++k) marks[ram_boxes[k]] = rcount[k];
        std::vector<bool> known(g.edges.size(), true);
        for (auto k : unknown) known[k] = false;
        // Balance: AS: sum over down edges (l + 1) = 2g + 2.
        //          F:  sum(down l + 1) + sum(up 1 - k) + #horizontal + #ramified marks = 2.
        auto residual = [&](std::size_t v, int& free_coeff, std::size_t& free_edge) {
            const auto& vx = g.vertices[v];
            int sum = 0, nfree = 0;
            for (std::size_t k = 0; k < g.edges.size(); ++k) {
                const auto& e = g.edges[k];
                const bool is1 = idx[e.v1] == v, is2 = idx[e.v2] == v;
                if (!is1 && !is2) continue;
                const bool hor = g.vertices[idx[e.v1]].level == g.vertices[idx[e.v2]].level;
                if (hor) {
                    if (vx.type == CoverType::frobenius) sum += is1 + is2;
                    continue;
                }
                const int sign = is1 ? 1 : -1;
                if (!known[k]) {
                    ++nfree;
                    free_coeff = sign;
                    free_edge = k;
                } else {
                    sum += sign * e.slope;
                }
                sum += 1;
            }
            sum += marks[v];
            const int target = vx.type == CoverType::artin_schreier ? 2 * vx.genus + 2 : 2;
            return std::pair<int, int>{target - sum, nfree};
        };
        std::size_t remaining = unknown.size();
        while (remaining > 0) {
            bool progress = false;
            for (std::size_t v = 0; v < nv && remaining > 0; ++v) {
                if (g.vertices[v].type == CoverType::etale) continue;
                int coeff = 0;
                std::size_t edge = 0;
                auto [rest, nfree] = residual(v, coeff, edge);
                if (nfree != 1) continue;
                const int slope = coeff * rest;
                if (slope <= 0 || slope % 2 == 0) return false;
                g.edges[edge].slope = slope;
                known[edge] = true;
                --remaining;
                progress = true;
            }
            if (!progress) return false;
        }
        for (std::size_t v = 0; v < nv; ++v) {
            if (g.vertices[v].type == CoverType::etale) continue;
            int coeff = 0;
            std::size_t edge = 0;
            if (residual(v, coeff, edge).first != 0) return false;
        }
        return true;
    }

    struct Invalid {};

    void label(const LevelGraph& g, const std::vector<std::size_t>& ram_boxes, const std::vector<int>& rcount,
               const std::vector<std::size_t>& unram_boxes, const std::vector<int>& ucount,
               std::map<std::string, LevelGraph>& found) const {
        std::vector<int> box_of(a_.N(), -1);
        bool checked = false;
        distribute(ram_, rcount, box_of, [&] {
            std::vector<int> box2 = box_of;
            distribute(unram_, ucount, box2, [&] {
                LevelGraph h = g;
                for (int i = 0; i < a_.N(); ++i) {
                    const bool ram = a_.lambda[i] == 2;
                    const auto& v = h.vertices[ram ? ram_boxes[box2[i]] : unram_boxes[box2[i]]];
                    h.markings.push_back({v.id, a_.lambda[i], 0, v.image});
                }
                // Validity does not depend on which labels share a vertex.
                if (!checked) {
                    if (!validate(h, a_).valid()) throw Invalid{};
                    checked = true;
                }
                std::string key = canonical_form(h);
                if (!found.count(key)) found.emplace(std::move(key), canonical_relabel(h));
            });
        });
    }

    HurwitzData a_;
    int max_;
    std::vector<int> ram_, unram_;
};

}  // namespace

std::vector<LevelGraph> enumerate_graphs(const HurwitzData& a, int max_vertices) {
    if (a.p != 2 || a.g != 0 || a.regime != Regime::mixed)
        throw StrataError("enumeration supports the mixed regime with p = 2 and g = 0 only");
    if (!a.riemann_hurwitz()) return {};
    Enumerator en(a, max_vertices);
    std::vector<std::future<std::map<std::string, LevelGraph>>> jobs;
    for (int t = 1; t <= max_vertices; ++t)
        jobs.push_back(std::async(std::launch::async, [&en, t] { return en.run_size(t); }));
    std::map<std::string, LevelGraph> all;
    for (auto& j : jobs) all.merge(j.get());
    std::vector<LevelGraph> out;
    for (auto& [k, g] : all) out.push_back(std::move(g));
    return out;
}

std::vector<LevelGraph> enumerate_components(const HurwitzData& a, int max_vertices) {
    std::vector<LevelGraph> out;
    for (auto& g : enumerate_graphs(a, max_vertices))
        if (two_level_no_horizontal(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace lhur
