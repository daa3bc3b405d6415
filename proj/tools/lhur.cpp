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

// Command-line front end for the lhur library.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lhur/ascover.hpp"
#include "lhur/cartier.hpp"
#include "lhur/example.hpp"
#include "lhur/ffield.hpp"
#include "lhur/loci.hpp"
#include "lhur/ratfunc.hpp"
#include "lhur/strata.hpp"

using namespace lhur;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kField = 3, kSchema = 4, kDomain = 5 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string field;
    std::vector<std::string> binds;
    std::string format = "json";
};

const GaloisField& field_of(const Globals& g) { return GaloisField::parse(g.field); }

std::map<std::string, std::uint32_t> bindings_of(const Globals& g, const GaloisField& f) {
    std::map<std::string, std::uint32_t> out;
    for (const auto& b : g.binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("binding '" + b + "' is not name=value");
        out[b.substr(0, eq)] = parse_element(b.substr(eq + 1), f, out);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(t, &used));
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::logic_error&) {
            throw UsageError("'" + t + "' is not an integer");
        }
    }
    return out;
}

Place place_of(const std::string& s, const GaloisField& f, const std::map<std::string, std::uint32_t>& b) {
    if (s == "inf" || s == "infinity") return Place::infinity();
    return Place::finite(parse_element(s, f, b));
}

json place_json(const Place& q) { return q.infinite ? json("inf") : json(q.value); }

json places_json(const std::vector<Place>& qs) {
    json a = json::array();
    for (const auto& q : qs) a.push_back(place_json(q));
    return a;
}

std::string places_text(const std::vector<Place>& qs, const GaloisField& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < qs.size(); ++i) out += (i ? ", " : "") + qs[i].to_string(f);
    return out + ")";
}

void emit(const Globals& g, const json& j, const std::function<std::string()>& text) {
    if (g.format == "text") std::cout << text();
    else std::cout << j.dump(2) << "\n";
}

json read_json(const std::string& file) {
    try {
        if (file == "-") return json::parse(std::cin);
        std::ifstream in(file);
        if (!in) throw SchemaError("cannot open '" + file + "'");
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

int cmd_forms(const Globals& g, const std::string& which, const std::string& expr) {
    const GaloisField& f = field_of(g);
    auto b = bindings_of(g, f);
    RationalFunction h = parse_rational(expr, f, b);
    if (which == "cartier") {
        auto r = cartier({h}).f;
        emit(g, {{"exact", r.is_zero()}, {"result", r.to_string()}},
             [&] { return "c(" + h.to_string() + " dy) = (" + r.to_string() + ") dy\n"; });
        return kOk;
    }
    BivariantForm psi{h};
    auto r = twisted_cartier(psi);
    if (which == "tc") {
        auto cl = classify(psi);
        emit(g, {{"classification", to_string(cl)}, {"result", r.to_string()}},
             [&] { return "tc = " + r.to_string() + "  [" + to_string(cl) + "]\n"; });
    } else if (which == "exact") {
        const bool e = r.is_zero();
        emit(g, {{"exact", e}, {"result", r.to_string()}},
             [&] { return std::string(e ? "exact" : "not exact") + "  (tc = " + r.to_string() + ")\n"; });
    } else {
        auto w = quasi_exact_witness(psi);
        emit(g, {{"quasi_exact", w.has_value()}, {"constant", w ? json(*w) : json(nullptr)}, {"result", r.to_string()}},
             [&] {
                 return std::string(w ? "quasi-exact, tc = " + f.render(*w) : "not quasi-exact (tc = " + r.to_string() + ")") +
                        "\n";
             });
    }
    return kOk;
}

int cmd_ascover(const Globals& g, const std::string& expr, const std::string& marks, const std::string& compare,
                const std::string& compare_marks) {
    const GaloisField& f = field_of(g);
    auto b = bindings_of(g, f);
    auto parse_marks = [&](const std::string& s) {
        std::vector<Place> out;
        for (const auto& t : split(s, ',')) out.push_back(place_of(t, f, b));
        return out;
    };
    auto cov = from_equation(parse_rational(expr, f, b, 'x'), parse_marks(marks));
    auto tf = trace_form(cov);
    auto e = cov.conductors();
    auto md = moduli_dimension(static_cast<int>(f.characteristic()), cov.genus(), e,
                               static_cast<int>(cov.marked().size()));
    json orders = json::array();
    for (const auto& o : tf.orders)
        orders.push_back({{"branch", place_json(o.branch)}, {"plain", o.plain}, {"logarithmic", o.logarithmic}});
    json rd = json::object();
    for (auto [q, o] : ramification_divisor(cov)) rd[q.infinite ? "inf" : std::to_string(q.value)] = o;
    json j{{"branch_points", places_json(cov.branch_points())},
           {"conductors", e},
           {"genus", cov.genus()},
           {"marked", places_json(cov.marked())},
           {"moduli_dimension", md.value},
           {"ramification_divisor", rd},
           {"rhs", cov.rhs().to_string('x')},
           {"trace_orders", orders}};
    std::optional<bool> iso;
    if (!compare.empty()) {
        iso = isomorphic(cov, from_equation(parse_rational(compare, f, b, 'x'), parse_marks(compare_marks)));
        j["isomorphic"] = *iso;
    }
    emit(g, j, [&] {
        std::ostringstream out;
        out << "y^p - y = " << cov.rhs().to_string('x') << "\n";
        out << "branch points " << places_text(cov.branch_points(), f) << ", conductors (";
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? ", " : "") << e[i];
        out << "), genus " << cov.genus() << ", moduli dimension " << md.value << "\n";
        for (const auto& o : tf.orders)
            out << "trace form at " << o.branch.to_string(f) << ": order " << o.plain << " (logarithmic "
                << o.logarithmic << ")\n";
        if (iso) out << (*iso ? "isomorphic" : "not isomorphic") << "\n";
        return out.str();
    });
    return kOk;
}

// ---------------------------------------------------------------------------

json ledger_json(const StratumLedger& led) {
    json comps = json::array();
    for (const auto& c : led.components)
        comps.push_back({{"id", c.id}, {"role", to_string(c.role)}, {"level", c.level}, {"dimension", c.value}});
    json per = json::object();
    for (auto [lv, v] : led.per_level) per[std::to_string(lv)] = v;
    return {{"total", led.total},
            {"mod_as", led.mod_as},
            {"mod_ex", led.mod_ex},
            {"mod_qu_ex", led.mod_qu_ex},
            {"closed_form", led.closed_form},
            {"horizontal_target_edges", led.horizontal_target_edges},
            {"exact_vertices", led.exact_vertices},
            {"per_level", per},
            {"components", comps},
            {"monoid_rank", led.monoid_rank},
            {"free", led.free}};
}

int cmd_strata(const Globals& g, const std::string& action, const std::string& file, bool dot) {
    LevelGraph graph = parse_level_graph(read_json(file));
    if (dot) {
        if (action != "validate") {
            if (action == "dim") stratum_dimension(graph);
            else monoid_rank(graph);
        }
        std::cout << to_dot(graph);
        return kOk;
    }
    if (action == "validate") {
        auto r = validate(graph);
        json v = json::array();
        for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"where", x.where}, {"message", x.message}});
        emit(g, {{"valid", r.valid()}, {"violations", v}, {"relations", r.relations}}, [&] {
            std::string out = r.valid() ? "valid\n" : "invalid\n";
            for (const auto& x : r.violations) out += "  " + x.rule + " at " + x.where + ": " + x.message + "\n";
            for (const auto& s : r.relations) out += "  " + s + "\n";
            return out;
        });
    } else if (action == "dim") {
        auto led = stratum_dimension(graph);
        emit(g, ledger_json(led), [&] {
            std::ostringstream out;
            out << "dimension " << led.total << " = " << led.mod_as << " (AS) + " << led.mod_ex << " (exact) + "
                << led.mod_qu_ex << " (quasi-exact); closed form " << led.closed_form << "\n";
            for (const auto& c : led.components)
                out << "  " << c.id << " level " << c.level << " " << to_string(c.role) << ": " << c.value << "\n";
            return out.str();
        });
    } else {
        auto mr = monoid_rank(graph);
        emit(g, {{"rank", mr.rank}, {"free", mr.free}}, [&] {
            return "rank " + std::to_string(mr.rank) + (mr.free ? ", free\n" : ", freeness not asserted\n");
        });
    }
    return kOk;
}

struct EnumerateArgs {
    int p = 2, h = 0, g = 0, max_vertices = 5;
    std::string lambda, xi, regime = "mixed";
    bool all = false, dot = false;
};

int cmd_enumerate(const Globals& gl, const EnumerateArgs& a) {
    HurwitzData d;
    d.p = a.p;
    d.h = a.h;
    d.g = a.g;
    d.lambda = int_list(a.lambda);
    d.xi = a.xi.empty() ? std::vector<int>(d.lambda.size(), 0) : int_list(a.xi);
    d.regime = parse_regime(a.regime);
    if (d.xi.size() != d.lambda.size()) throw UsageError("--xi and --lambda differ in length");
    auto graphs = a.all ? enumerate_graphs(d, a.max_vertices) : enumerate_components(d, a.max_vertices);
    if (a.dot) {
        for (const auto& g : graphs) std::cout << to_dot(g);
        return kOk;
    }
    json arr = json::array();
    for (const auto& g : graphs) arr.push_back(to_json(g));
    emit(gl, {{"count", graphs.size()}, {"graphs", arr}}, [&] {
        std::ostringstream out;
        out << graphs.size() << (a.all ? " strata\n" : " components\n");
        for (const auto& g : graphs) {
            auto led = stratum_dimension(g);
            out << "  " << g.vertices.size() << " source vertices, " << g.edges.size() << " edges, levels "
                << -g.min_level() + 1 << ", dimension " << led.total << "\n";
        }
        return out.str();
    });
    return kOk;
}

// ---------------------------------------------------------------------------

std::vector<Pin> pins_of(const std::string& s, std::size_t n, const GaloisField& f,
                         const std::map<std::string, std::uint32_t>& b) {
    if (s.empty()) return default_pins(n);
    auto parts = split(s, ',');
    std::vector<Pin> pins;
    if (s.find('=') == std::string::npos) {
        if (parts.size() > 3 || parts.size() > n) throw UsageError("at most three pins");
        for (std::size_t i = 0; i < parts.size(); ++i) pins.push_back({n - parts.size() + i, place_of(parts[i], f, b)});
        return pins;
    }
    for (const auto& t : parts) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError("pin '" + t + "' is not index=place");
        int idx = int_list(t.substr(0, eq)).at(0);
        if (idx < 1 || static_cast<std::size_t>(idx) > n) throw UsageError("pin index out of range");
        pins.push_back({static_cast<std::size_t>(idx - 1), place_of(t.substr(eq + 1), f, b)});
    }
    return pins;
}

int cmd_loci(const Globals& g, const std::string& action, const std::string& pattern, const std::string& kind_s,
             const std::string& pin, const std::string& config) {
    const GaloisField& f = field_of(g);
    auto b = bindings_of(g, f);
    auto m = int_list(pattern);
    LocusKind kind = parse_locus_kind(kind_s);
    json base{{"field", f.designator()}, {"pattern", m}, {"kind", to_string(kind)}};
    if (action == "formula") {
        int d = dimension_formula(m, static_cast<int>(f.characteristic()), kind);
        base["dimension"] = d;
        emit(g, base, [&] { return "dimension formula " + std::to_string(d) + "\n"; });
    } else if (action == "search") {
        auto configs = locus_search(f, m, kind, pins_of(pin, m.size(), f, b));
        json arr = json::array();
        for (const auto& c : configs) arr.push_back(places_json(c));
        base["configs"] = arr;
        base["count"] = configs.size();
        emit(g, base, [&] {
            std::string out = std::to_string(configs.size()) + " configurations\n";
            for (const auto& c : configs) out += "  " + places_text(c, f) + "\n";
            return out;
        });
    } else {
        if (config.empty()) throw UsageError("tangent needs --config");
        MarkingConfig c;
        for (const auto& t : split(config, ',')) c.push_back(place_of(t, f, b));
        auto t = tangent_space(f, c, m, kind);
        const int formula = dimension_formula(m, static_cast<int>(f.characteristic()), kind);
        base["config"] = places_json(c);
        base["dimension"] = t.dimension;
        base["formula"] = formula;
        base["alpha_rank"] = t.alpha_rank;
        base["tc_rank"] = t.tc_rank;
        base["kernel"] = t.kernel;
        emit(g, base, [&] {
            return "tangent dimension " + std::to_string(t.dimension) + " (formula " + std::to_string(formula) + ")\n";
        });
    }
    return kOk;
}

int cmd_example(const Globals& g, bool perturb, int max_vertices) {
    auto r = run_example({g.field, perturb, max_vertices});
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"id", c.id}, {"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
    json j{{"field", r.field}, {"pass", r.pass}, {"checks", checks}};
    if (!r.pass) j["failed"] = r.checks.back().id;
    emit(g, j, [&] {
        std::string out;
        for (const auto& c : r.checks)
            out += "(" + c.id + ") " + (c.pass ? "PASS " : "FAIL ") + c.claim + "\n      " + c.detail + "\n";
        out += r.pass ? "all checks passed\n" : "aborted at check (" + r.checks.back().id + ")\n";
        return out;
    });
    return r.pass ? kOk : kDomain;
}

int report_error(int code, const std::string& kind, const std::string& message) {
    std::cout << json{{"error", {{"code", code}, {"kind", kind}, {"message", message}}}}.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lhur: Cartier operators, Artin-Schreier covers and level-graph strata in characteristic p"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    const char* env = std::getenv("LHUR_FIELD");
    g.field = env && *env ? env : "2^4";
    app.add_option("--field", g.field, "field designator p^k (default from LHUR_FIELD, else 2^4)");
    app.add_option("--bind", g.binds, "name=value binding usable in expressions, repeatable");
    app.add_option("--format", g.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::function<int()> run;

    std::string expr;
    for (const char* name : {"cartier", "tc", "exact", "quasi-exact"}) {
        auto* sc = app.add_subcommand(name, std::string(name) == "cartier" ? "Cartier operator of f dy"
                                                                           : "twisted Cartier operator of f dy/dx");
        sc->add_option("--expr,expr", expr, "rational function in y")->required();
        sc->callback([&, which = std::string(name)] { run = [&, which] { return cmd_forms(g, which, expr); }; });
    }

    std::string marks, compare, compare_marks;
    auto* as = app.add_subcommand("ascover", "Artin-Schreier cover y^p - y = g(x)");
    as->add_option("--expr,expr", expr, "right-hand side g(x)")->required();
    as->add_option("--mark", marks, "comma-separated marked points");
    as->add_option("--compare", compare, "second right-hand side to test for isomorphism");
    as->add_option("--compare-mark", compare_marks, "marked points of the second cover");
    as->callback([&] { run = [&] { return cmd_ascover(g, expr, marks, compare, compare_marks); }; });

    std::string file = "-";
    bool dot = false;
    auto* st = app.add_subcommand("strata", "enhanced level graphs");
    st->require_subcommand(1);
    for (const char* name : {"validate", "dim", "monoid"}) {
        auto* sc = st->add_subcommand(name);
        sc->add_option("--file,file", file, "graph JSON, - for stdin");
        sc->add_flag("--dot", dot, "emit DOT instead of JSON");
        sc->callback([&, action = std::string(name)] { run = [&, action] { return cmd_strata(g, action, file, dot); }; });
    }
    EnumerateArgs ea;
    auto* en = st->add_subcommand("enumerate", "irreducible components (or all strata with --all)");
    en->set_help_flag("--help", "Print this help message and exit");
    en->add_option("--p", ea.p);
    en->add_option("--h", ea.h)->required();
    en->add_option("--g", ea.g);
    en->add_option("--lambda", ea.lambda, "comma-separated ramification indices")->required();
    en->add_option("--xi", ea.xi, "comma-separated xi (default zeros)");
    en->add_option("--regime", ea.regime);
    en->add_option("--max-vertices", ea.max_vertices);
    en->add_flag("--all", ea.all, "all strata rather than components");
    en->add_flag("--dot", ea.dot);
    en->callback([&] { run = [&] { return cmd_enumerate(g, ea); }; });

    std::string pattern, kind = "exact", pin, config;
    auto* lo = app.add_subcommand("loci", "exact and quasi-exact loci");
    lo->require_subcommand(1);
    for (const char* name : {"search", "tangent", "formula"}) {
        auto* sc = lo->add_subcommand(name);
        sc->add_option("--pattern", pattern, "zero/pole orders, e.g. 1,1,1,1,-2")->required();
        sc->add_option("--kind", kind, "exact or quasi-exact");
        sc->add_option("--pin", pin, "places for the last markings (0,1,inf) or index=place list");
        sc->add_option("--config", config, "comma-separated marking configuration");
        sc->callback([&, action = std::string(name)] {
            run = [&, action] { return cmd_loci(g, action, pattern, kind, pin, config); };
        });
    }

    bool perturb = false;
    int max_vertices = 5;
    auto* ex = app.add_subcommand("example6", "reproduce the four-point degree-two example");
    ex->add_flag("--perturb-slope", perturb, "negative control: perturb one slope");
    ex->add_option("--max-vertices", max_vertices);
    ex->callback([&] { run = [&] { return cmd_example(g, perturb, max_vertices); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error(kUsage, "usage", e.what());
    }

    try {
        return run ? run() : kUsage;
    } catch (const UsageError& e) {
        return report_error(kUsage, "usage", e.what());
    } catch (const ParseError& e) {
        return report_error(kParse, "parse", e.what());
    } catch (const FieldError& e) {
        return report_error(kField, "field", e.what());
    } catch (const SchemaError& e) {
        return report_error(kSchema, "schema", e.what());
    } catch (const std::exception& e) {
        return report_error(kDomain, "domain", e.what());
    }
}
