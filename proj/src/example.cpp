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

#include "lhur/example.hpp"

#include <utility>

#include "lhur/ascover.hpp"
#include "lhur/cartier.hpp"
#include "lhur/loci.hpp"

namespace lhur {

namespace {

const std::vector<std::pair<std::string, std::string>> kGraphs = {
    {"delta_1_0", R"({"p":2,"regime":"mixed","source":{"vertices":[{"id":"E","genus":1,"level":0,"cover_type":"artin_schreier","image":"D0"},{"id":"R","genus":0,"level":-1,"cover_type":"frobenius","image":"D1"}],"edges":[{"id":"e","v1":"E","v2":"R","slope":3,"image":"t"}]},"target":{"vertices":[{"id":"D0","genus":0,"level":0},{"id":"D1","genus":0,"level":-1}],"edges":[{"id":"t","v1":"D0","v2":"D1"}]},"markings":[{"vertex":"R","lambda":2,"xi":0,"image":"D1"},{"vertex":"R","lambda":2,"xi":0,"image":"D1"},{"vertex":"R","lambda":2,"xi":0,"image":"D1"},{"vertex":"R","lambda":2,"xi":0,"image":"D1"}]})"},
    {"delta_1_00", R"({"p":2,"regime":"mixed","source":{"vertices":[{"id":"E","genus":1,"level":0,"cover_type":"artin_schreier","image":"D0"},{"id":"R1","genus":0,"level":-1,"cover_type":"frobenius","image":"D1"},{"id":"R2","genus":0,"level":-1,"cover_type":"frobenius","image":"D2"}],"edges":[{"id":"e1","v1":"E","v2":"R1","slope":1,"image":"t1"},{"id":"e2","v1":"E","v2":"R2","slope":1,"image":"t2"}]},"target":{"vertices":[{"id":"D0","genus":0,"level":0},{"id":"D1","genus":0,"level":-1},{"id":"D2","genus":0,"level":-1}],"edges":[{"id":"t1","v1":"D0","v2":"D1"},{"id":"t2","v1":"D0","v2":"D2"}]},"markings":[{"vertex":"R1","lambda":2,"xi":0,"image":"D1"},{"vertex":"R1","lambda":2,"xi":0,"image":"D1"},{"vertex":"R2","lambda":2,"xi":0,"image":"D2"},{"vertex":"R2","lambda":2,"xi":0,"image":"D2"}]})"},
    {"delta_1_0_00", R"({"p":2,"regime":"mixed","source":{"vertices":[{"id":"E","genus":1,"level":0,"cover_type":"artin_schreier","image":"D0"},{"id":"X","genus":0,"level":-1,"cover_type":"frobenius","image":"D1"},{"id":"R1","genus":0,"level":-2,"cover_type":"frobenius","image":"D2"},{"id":"R2","genus":0,"level":-2,"cover_type":"frobenius","image":"D3"}],"edges":[{"id":"e0","v1":"E","v2":"X","slope":3,"image":"t0"},{"id":"e1","v1":"X","v2":"R1","slope":1,"image":"t1"},{"id":"e2","v1":"X","v2":"R2","slope":1,"image":"t2"}]},"target":{"vertices":[{"id":"D0","genus":0,"level":0},{"id":"D1","genus":0,"level":-1},{"id":"D2","genus":0,"level":-2},{"id":"D3","genus":0,"level":-2}],"edges":[{"id":"t0","v1":"D0","v2":"D1"},{"id":"t1","v1":"D1","v2":"D2"},{"id":"t2","v1":"D1","v2":"D3"}]},"markings":[{"vertex":"R1","lambda":2,"xi":0,"image":"D2"},{"vertex":"R1","lambda":2,"xi":0,"image":"D2"},{"vertex":"R2","lambda":2,"xi":0,"image":"D3"},{"vertex":"R2","lambda":2,"xi":0,"image":"D3"}]})"},
    {"delta_00_0_0", R"({"p":2,"regime":"mixed","source":{"vertices":[{"id":"A1","genus":0,"level":0,"cover_type":"artin_schreier","image":"D1"},{"id":"A2","genus":0,"level":0,"cover_type":"artin_schreier","image":"D2"},{"id":"R1","genus":0,"level":-1,"cover_type":"frobenius","image":"D3"},{"id":"R2","genus":0,"level":-1,"cover_type":"frobenius","image":"D4"}],"edges":[{"id":"h1","v1":"A1","v2":"A2","slope":0,"image":"th"},{"id":"h2","v1":"A1","v2":"A2","slope":0,"image":"th"},{"id":"e1","v1":"A1","v2":"R1","slope":1,"image":"t1"},{"id":"e2","v1":"A2","v2":"R2","slope":1,"image":"t2"}]},"target":{"vertices":[{"id":"D1","genus":0,"level":0},{"id":"D2","genus":0,"level":0},{"id":"D3","genus":0,"level":-1},{"id":"D4","genus":0,"level":-1}],"edges":[{"id":"th","v1":"D1","v2":"D2"},{"id":"t1","v1":"D1","v2":"D3"},{"id":"t2","v1":"D2","v2":"D4"}]},"markings":[{"vertex":"R1","lambda":2,"xi":0,"image":"D3"},{"vertex":"R1","lambda":2,"xi":0,"image":"D3"},{"vertex":"R2","lambda":2,"xi":0,"image":"D4"},{"vertex":"R2","lambda":2,"xi":0,"image":"D4"}]})"},
};

RationalFunction lin(const GaloisField& f, std::uint32_t a) { return RationalFunction(Polynomial::linear(f, a)); }

ExampleCheck check_tc_formula(const GaloisField& f) {
    ExampleCheck c{"a", "tc(y(y-1)(y-l)/(y-m)^2 dy/dx) = (y-sqrt(l))/(y-m) for all l, m", true, ""};
    const std::uint32_t q = f.order();
    for (std::uint32_t l = 0; l < q && c.pass; ++l)
        for (std::uint32_t m = 0; m < q; ++m) {
            RationalFunction psi = lin(f, 0) * lin(f, 1) * lin(f, l) / lin(f, m).pow(2);
            RationalFunction want = lin(f, f.pth_root(l)) / lin(f, m);
            if (twisted_cartier({psi}) != want) {
                c.pass = false;
                c.detail = "fails at l=" + f.render(l) + ", m=" + f.render(m);
                break;
            }
        }
    if (c.pass) c.detail = std::to_string(q * q) + " pairs checked over GF(" + f.designator() + ")";
    return c;
}

ExampleCheck check_quasi_exact(const GaloisField& f) {
    ExampleCheck c{"b", "the form is quasi-exact iff m = sqrt(l)", true, ""};
    int hits = 0;
    for (std::uint32_t l = 2; l < f.order() && c.pass; ++l)
        for (std::uint32_t m = 2; m < f.order(); ++m) {
            if (m == l) continue;
            RationalFunction psi = lin(f, 0) * lin(f, 1) * lin(f, l) / lin(f, m).pow(2);
            const bool qe = classify({psi}) == Classification::quasi_exact;
            if (qe != (m == f.pth_root(l))) {
                c.pass = false;
                c.detail = "fails at l=" + f.render(l) + ", m=" + f.render(m);
                break;
            }
            hits += qe;
        }
    if (c.pass) c.detail = std::to_string(hits) + " quasi-exact configurations, one per l";
    if (c.pass && hits != static_cast<int>(f.order()) - 2) {
        c.pass = false;
        c.detail = "expected one quasi-exact m per l";
    }
    return c;
}

ExampleCheck check_supersingular(const GaloisField& f) {
    ExampleCheck c{"c", "y^2+y=x^3 has e=(4), h=1 and a trace-form zero of order 4", false, ""};
    auto cov = from_equation(RationalFunction::variable(f).pow(3));
    auto tf = trace_form(cov);
    c.pass = cov.conductors() == std::vector<int>{4} && cov.genus() == 1 && tf.orders.size() == 1 &&
             tf.orders[0].plain == 4;
    c.detail = "e=(" + std::to_string(cov.conductors().front()) + "), h=" + std::to_string(cov.genus()) +
               ", order " + std::to_string(tf.orders.front().plain) + " (" + std::to_string(tf.orders.front().logarithmic) +
               " against the logarithmic frame)";
    return c;
}

ExampleCheck check_j_family(const GaloisField& f) {
    ExampleCheck c{"d", "y^2-y=1/x+1/(x-a) has h=1 and moduli dimension 1", true, ""};
    auto x = RationalFunction::variable(f);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
        auto cov = from_equation(x.pow(-1) + (x - RationalFunction::constant(f, a)).pow(-1));
        if (cov.genus() != 1 || cov.conductors() != std::vector<int>{2, 2}) {
            c.pass = false;
            c.detail = "fails at a=" + f.render(a);
            return c;
        }
    }
    const int dim = moduli_dimension(2, 1, {2, 2}, 0).value;
    c.pass = dim == 1;
    c.detail = "e=(2,2), h=1 for all a != 0; dimension " + std::to_string(dim);
    return c;
}

ExampleCheck check_exact(const GaloisField& f) {
    ExampleCheck c{"e", "y^2(y-1)^2/(y-inf)^2 dy/dx is exact", false, ""};
    RationalFunction psi = lin(f, 0).pow(2) * lin(f, 1).pow(2);
    const bool direct = is_exact({psi});
    const bool via_locus =
        locus_membership(f, {Place::finite(0), Place::finite(1), Place::infinity()}, {2, 2, -2}, LocusKind::exact);
    c.pass = direct && via_locus;
    c.detail = std::string("tc = ") + twisted_cartier({psi}).to_string() + ", locus membership " +
               (via_locus ? "true" : "false");
    return c;
}

ExampleCheck check_strata(bool perturb) {
    ExampleCheck c{"f", "stratum dimensions 1, 0, 0 and monoid ranks 1, 2, 2", true, ""};
    struct Row {
        const char* name;
        int dim;
        int rank;
    };
    for (auto [name, dim, rank] : {Row{"delta_1_0", 1, 1}, Row{"delta_1_0_00", 0, 2}, Row{"delta_00_0_0", 0, 2}}) {
        LevelGraph g = example_graph(name);
        if (perturb && std::string(name) == "delta_1_0_00") g.edges.front().slope += 2;
        if (!c.detail.empty()) c.detail += "; ";
        try {
            auto led = stratum_dimension(g);
            c.detail += std::string(name) + ": dim " + std::to_string(led.total) + ", rank " +
                        std::to_string(led.monoid_rank);
            if (led.total != dim || led.monoid_rank != rank) c.pass = false;
        } catch (const StrataError& e) {
            c.pass = false;
            c.detail += std::string(name) + ": " + e.what();
        }
    }
    return c;
}

ExampleCheck check_components(int max_vertices) {
    ExampleCheck c{"g", "A=(1,0,4,(2,2,2,2)) has 4 irreducible components", false, ""};
    HurwitzData a{2, 1, 0, {2, 2, 2, 2}, {0, 0, 0, 0}, Regime::mixed};
    auto comps = enumerate_components(a, max_vertices);
    c.pass = comps.size() == 4;
    c.detail = std::to_string(comps.size()) + " components";
    return c;
}

}  // namespace

std::vector<std::string> example_graph_names() {
    std::vector<std::string> out;
    for (const auto& [n, j] : kGraphs) out.push_back(n);
    return out;
}

LevelGraph example_graph(const std::string& name) {
    for (const auto& [n, j] : kGraphs)
        if (n == name) return parse_level_graph(nlohmann::json::parse(j));
    throw SchemaError("no built-in graph named '" + name + "'");
}

ExampleReport run_example(const ExampleOptions& opt) {
    const GaloisField& f = GaloisField::parse(opt.field);
    if (f.characteristic() != 2) throw FieldError("the four-point example needs characteristic 2");
    ExampleReport r;
    r.field = f.designator();
    r.pass = true;
    auto step = [&](ExampleCheck c) {
        r.pass = c.pass;
        r.checks.push_back(std::move(c));
    };
    if (r.pass) step(check_tc_formula(f));
    if (r.pass) step(check_quasi_exact(f));
    if (r.pass) step(check_supersingular(f));
    if (r.pass) step(check_j_family(f));
    if (r.pass) step(check_exact(f));
    if (r.pass) step(check_strata(opt.perturb_slope));
    if (r.pass) step(check_components(opt.max_vertices));
    return r;
}

}  // namespace lhur
