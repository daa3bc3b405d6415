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

#include "lhur/loci.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <optional>
#include <thread>

namespace lhur {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

void check_distinct(const GaloisField& f, const MarkingConfig& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (c[i] == c[j]) throw LocusError("repeated marking " + c[i].to_string(f));
}

// Rational functions as columns of coefficient vectors over a common denominator.
Matrix function_matrix(const std::vector<RationalFunction>& fs, const GaloisField& f) {
    Polynomial common = Polynomial::constant(f, 1);
    for (const auto& g : fs) common = common * g.den();
    std::vector<Polynomial> nums;
    int deg = 0;
    for (const auto& g : fs) {
        nums.push_back(g.num() * common.divmod(g.den()).first);
        deg = std::max(deg, nums.back().degree());
    }
    Matrix m(static_cast<std::size_t>(deg) + 1, std::vector<std::uint32_t>(fs.size(), 0));
    for (std::size_t j = 0; j < nums.size(); ++j)
        for (int r = 0; r <= nums[j].degree(); ++r) m[r][j] = nums[j].coeff(r);
    return m;
}

int function_rank(const std::vector<RationalFunction>& fs, const GaloisField& f) {
    if (fs.empty()) return 0;
    return matrix_rank(function_matrix(fs, f), f);
}

// prod (y - p_i - a_i eps)^(m_i) for finite markings.
DualRational deformed_form(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m,
                           const std::vector<std::uint32_t>& a) {
    DualRational acc{RationalFunction::constant(f, 1), RationalFunction(f)};
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].infinite) continue;
        DualRational factor{RationalFunction(Polynomial::linear(f, c[i].value)),
                            RationalFunction::constant(f, f.neg(i < a.size() ? a[i] : 0))};
        acc = acc * factor.pow(m[i]);
    }
    return acc;
}

std::vector<RationalFunction> first_order_forms(const GaloisField& f, const MarkingConfig& c,
                                                const std::vector<int>& m) {
    std::vector<RationalFunction> out;
    const std::size_t d = c.size() - 3;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::uint32_t> a(c.size(), 0);
        a[j] = 1;
        out.push_back(deformed_form(f, c, m, a).eps);
    }
    return out;
}

}  // namespace

std::string to_string(LocusKind k) { return k == LocusKind::exact ? "exact" : "quasi-exact"; }

LocusKind parse_locus_kind(const std::string& s) {
    if (s == "exact") return LocusKind::exact;
    if (s == "quasi-exact" || s == "quasi_exact") return LocusKind::quasi_exact;
    throw LocusError("unknown locus kind '" + s + "'");
}

void check_pattern(const std::vector<int>& m, int p) {
    if (m.size() < 3) throw LocusError("a zero/pole pattern needs at least three markings");
    int sum = std::accumulate(m.begin(), m.end(), 0);
    if (sum != 2 * p - 2)
        throw LocusError("pattern sums to " + std::to_string(sum) + ", expected 2p-2 = " + std::to_string(2 * p - 2));
}

DualRational DualRational::inverse() const {
    RationalFunction inv = RationalFunction::constant(re.field(), 1) / re;
    return {inv, -(eps * inv * inv)};
}

DualRational DualRational::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    DualRational acc{RationalFunction::constant(re.field(), 1), RationalFunction(re.field())};
    for (int i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

BivariantForm pattern_form(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m) {
    if (c.size() != m.size()) throw LocusError("configuration and pattern differ in length");
    // A marking at infinity needs no factor: the degree of the pattern puts
    // exactly m_i there.
    Polynomial num = Polynomial::constant(f, 1), den = Polynomial::constant(f, 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].infinite) continue;
        Polynomial lin = Polynomial::linear(f, c[i].value);
        if (m[i] > 0) num = num * lin.pow(static_cast<unsigned>(m[i]));
        else if (m[i] < 0) den = den * lin.pow(static_cast<unsigned>(-m[i]));
    }
    return {RationalFunction(num, den)};
}

MarkingConfig normalize_finite(const GaloisField& f, const MarkingConfig& c) {
    const std::size_t moved = c.size() >= 3 ? c.size() - 3 : 0;
    auto at_inf = std::find(c.begin(), c.end(), Place::infinity());
    if (at_inf == c.end() || static_cast<std::size_t>(at_inf - c.begin()) >= moved) return c;
    // Send some point c0 to infinity: one outside the configuration if
    // possible, else one of the three fixed markings.
    std::optional<std::uint32_t> c0;
    for (std::uint32_t v = 0; v < f.order() && !c0; ++v)
        if (std::find(c.begin(), c.end(), Place::finite(v)) == c.end()) c0 = v;
    for (std::size_t i = moved; i < c.size() && !c0; ++i)
        if (!c[i].infinite) c0 = c[i].value;
    if (!c0) throw LocusError("cannot move the deformed markings off infinity");
    Mobius phi{&f, 0, 1, 1, f.neg(*c0)};  // y -> 1/(y - c0)
    MarkingConfig out;
    for (const auto& q : c) out.push_back(phi.apply(q));
    return out;
}

bool locus_membership(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind) {
    check_pattern(m, static_cast<int>(f.characteristic()));
    if (c.size() != m.size()) throw LocusError("configuration and pattern differ in length");
    check_distinct(f, c);
    Classification cl = classify(pattern_form(f, c, m));
    return kind == LocusKind::exact ? cl == Classification::exact : cl == Classification::quasi_exact;
}

TangentReport tangent_space(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind) {
    if (!locus_membership(f, c, m, kind)) throw LocusError("configuration is not in the " + to_string(kind) + " locus");
    const int p = static_cast<int>(f.characteristic());
    MarkingConfig fin = normalize_finite(f, c);
    auto omegas = first_order_forms(f, fin, m);
    std::vector<RationalFunction> images;
    for (const auto& w : omegas) images.push_back(twisted_cartier({w}));

    TangentReport r;
    r.deformations = static_cast<int>(c.size()) - 3;
    r.alpha_rank = function_rank(omegas, f);
    int floors = 0;
    for (int mi : m) floors += floor_div(mi, p);
    r.target_dim = std::max(0, 1 - floors);

    std::vector<RationalFunction> cols = images;
    if (kind == LocusKind::quasi_exact) cols.push_back(RationalFunction::constant(f, 1));
    Matrix mat = function_matrix(cols, f);
    r.tc_rank = matrix_rank(mat, f) - (kind == LocusKind::quasi_exact ? 1 : 0);
    r.dimension = r.deformations - r.tc_rank;
    for (auto& v : null_space(mat, cols.size(), f)) {
        v.resize(static_cast<std::size_t>(r.deformations));
        r.kernel.push_back(std::move(v));
    }
    return r;
}

int tangent_dimension(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind) {
    return tangent_space(f, c, m, kind).dimension;
}

bool first_order_consistent(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind,
                            const std::vector<std::uint32_t>& b) {
    MarkingConfig fin = normalize_finite(f, c);
    std::vector<std::uint32_t> a(c.size(), 0);
    for (std::size_t j = 0; j < b.size() && j + 3 < c.size(); ++j) a[j] = f.frobenius(b[j]);
    DualRational form = deformed_form(f, fin, m, a);
    RationalFunction t = twisted_cartier({form.eps});
    return kind == LocusKind::exact ? t.is_zero() : t.is_constant();
}

int dimension_formula(const std::vector<int>& m, int p, LocusKind kind) {
    int floors = 0;
    for (int mi : m) floors += floor_div(mi, p);
    const int n = static_cast<int>(m.size());
    return (kind == LocusKind::exact ? n - 4 : n - 3) + floors;
}

std::vector<Pin> default_pins(std::size_t n) {
    if (n < 3) throw LocusError("need at least three markings to pin");
    return {{n - 3, Place::finite(0)}, {n - 2, Place::finite(1)}, {n - 1, Place::infinity()}};
}

std::vector<MarkingConfig> locus_search(const GaloisField& f, const std::vector<int>& m, LocusKind kind,
                                        const std::vector<Pin>& pins) {
    check_pattern(m, static_cast<int>(f.characteristic()));
    const std::size_t n = m.size();
    if (pins.size() > 3) throw LocusError("at most three markings can be pinned");
    MarkingConfig base(n);
    std::vector<bool> pinned(n, false);
    for (const auto& pin : pins) {
        if (pin.index >= n) throw LocusError("pin index " + std::to_string(pin.index + 1) + " out of range");
        if (pinned[pin.index]) throw LocusError("marking " + std::to_string(pin.index + 1) + " pinned twice");
        if (!pin.place.infinite && pin.place.value >= f.order()) throw LocusError("pinned place outside the field");
        pinned[pin.index] = true;
        base[pin.index] = pin.place;
    }
    for (std::size_t i = 0; i < pins.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (pins[i].place == pins[j].place) throw LocusError("two markings pinned to the same place");

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!pinned[i]) free.push_back(i);
    const std::uint64_t points = f.order() + 1ull;
    double space = 1;
    for (std::size_t i = 0; i < free.size(); ++i) space *= static_cast<double>(points);
    if (space > 1e8) throw LocusError("search space of " + std::to_string(space) + " configurations is infeasible");

    auto place_of = [&](std::uint64_t v) { return v == f.order() ? Place::infinity() : Place::finite(static_cast<std::uint32_t>(v)); };

    // Depth-first over the free markings after the first one.
    auto run_partition = [&](std::uint64_t first) {
        std::vector<MarkingConfig> found;
        MarkingConfig cfg = base;
        std::vector<std::uint8_t> used(points, 0);
        for (const auto& pin : pins) used[pin.place.infinite ? f.order() : pin.place.value] = 1;
        auto rec = [&](auto&& self, std::size_t depth) -> void {
            if (depth == free.size()) {
                Classification cl = classify(pattern_form(f, cfg, m));
                if ((kind == LocusKind::exact && cl == Classification::exact) ||
                    (kind == LocusKind::quasi_exact && cl == Classification::quasi_exact))
                    found.push_back(cfg);
                return;
            }
            for (std::uint64_t v = 0; v < points; ++v) {
                if (used[v]) continue;
                used[v] = 1;
                cfg[free[depth]] = place_of(v);
                self(self, depth + 1);
                used[v] = 0;
            }
        };
        if (free.empty()) {
            rec(rec, 0);
            return found;
        }
        if (used[first]) return found;
        used[first] = 1;
        cfg[free[0]] = place_of(first);
        rec(rec, 1);
        return found;
    };

    std::vector<MarkingConfig> out;
    if (free.empty()) {
        out = run_partition(0);
    } else {
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::future<std::vector<MarkingConfig>>> tasks;
        for (unsigned w = 0; w < workers; ++w) {
            tasks.push_back(std::async(std::launch::async, [&, w] {
                std::vector<MarkingConfig> part;
                for (std::uint64_t v = w; v < points; v += workers) {
                    auto r = run_partition(v);
                    part.insert(part.end(), r.begin(), r.end());
                }
                return part;
            }));
        }
        for (auto& t : tasks) {
            auto r = t.get();
            out.insert(out.end(), r.begin(), r.end());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lhur
