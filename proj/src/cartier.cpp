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

#include "lhur/cartier.hpp"

namespace lhur {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

// Raise every part to the p-th power as a function: g^p.
RationalFunction frobenius_power(const RationalFunction& g) {
    return g.pow(static_cast<long>(g.field().characteristic()));
}

}  // namespace

PPowerDecomposition ppower_decompose(const RationalFunction& f) {
    const GaloisField& F = f.field();
    const std::uint32_t p = F.characteristic();
    // f = a b^(p-1) / b^p; split the numerator by exponent residue.
    const Polynomial& b = f.den();
    Polynomial A = f.num() * b.pow(p - 1);
    std::vector<std::vector<std::uint32_t>> coeffs(p);
    for (int e = 0; e <= A.degree(); ++e) {
        auto& bucket = coeffs[static_cast<std::size_t>(e) % p];
        std::size_t slot = static_cast<std::size_t>(e) / p;
        if (bucket.size() <= slot) bucket.resize(slot + 1, 0);
        bucket[slot] = F.pth_root(A.coeff(e));
    }
    PPowerDecomposition out;
    for (std::uint32_t i = 0; i < p; ++i) out.parts.emplace_back(Polynomial(F, coeffs[i]), b);
    return out;
}

RationalFunction PPowerDecomposition::recombine() const {
    const GaloisField& F = parts.front().field();
    RationalFunction acc(F);
    RationalFunction yi = RationalFunction::constant(F, 1);
    const auto y = RationalFunction::variable(F);
    for (const auto& g : parts) {
        acc += frobenius_power(g) * yi;
        yi *= y;
    }
    return acc;
}

int Differential::order_at(const Place& q) const { return f.order_at(q) - (q.infinite ? 2 : 0); }

Divisor Differential::divisor() const {
    Divisor d = f.divisor();
    d[Place::infinity()] -= 2;
    if (d[Place::infinity()] == 0) d.erase(Place::infinity());
    return d;
}

int BivariantForm::order_at(const Place& q) const {
    const int p = static_cast<int>(f.field().characteristic());
    return f.order_at(q) + (q.infinite ? 2 * p - 2 : 0);
}

Divisor BivariantForm::divisor() const {
    const int p = static_cast<int>(f.field().characteristic());
    Divisor d = f.divisor();
    d[Place::infinity()] += 2 * p - 2;
    if (d[Place::infinity()] == 0) d.erase(Place::infinity());
    return d;
}

Differential cartier(const Differential& omega) { return {ppower_decompose(omega.f).parts.back()}; }

RationalFunction twisted_cartier(const BivariantForm& psi) { return ppower_decompose(psi.f).parts.back(); }

std::string to_string(Classification c) {
    switch (c) {
        case Classification::exact: return "exact";
        case Classification::quasi_exact: return "quasi-exact";
        case Classification::neither: return "neither";
    }
    return "neither";
}

bool is_exact(const BivariantForm& psi) { return twisted_cartier(psi).is_zero(); }

std::optional<std::uint32_t> quasi_exact_witness(const BivariantForm& psi) {
    RationalFunction t = twisted_cartier(psi);
    if (t.is_zero() || !t.is_constant()) return std::nullopt;
    return t.constant_value();
}

bool is_quasi_exact(const BivariantForm& psi) { return quasi_exact_witness(psi).has_value(); }

Classification classify(const BivariantForm& psi) {
    RationalFunction t = twisted_cartier(psi);
    if (t.is_zero()) return Classification::exact;
    if (t.is_constant()) return Classification::quasi_exact;
    return Classification::neither;
}

BivariantForm exact_form(const RationalFunction& h) { return {h.derivative()}; }

BivariantForm quasi_exact_normal_form(std::uint32_t u, const RationalFunction& h, const RationalFunction& w) {
    const GaloisField& F = h.field();
    const long p = F.characteristic();
    RationalFunction dw = w.derivative();
    if (dw.is_zero()) throw RationalFunctionError("w is a p-th power");
    if (u == 0) throw RationalFunctionError("u must be a unit");
    RationalFunction inner = h.derivative() + w.pow(p - 1) * dw;
    return {(inner / dw.pow(p)).scale(u)};
}

std::optional<RationalFunction> integrate(const Differential& omega) {
    const GaloisField& F = omega.f.field();
    const std::uint32_t p = F.characteristic();
    auto dec = ppower_decompose(omega.f);
    if (!dec.parts.back().is_zero()) return std::nullopt;
    RationalFunction h(F);
    const auto y = RationalFunction::variable(F);
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (dec.parts[i].is_zero()) continue;
        std::uint32_t inv = F.inv(F.from_int(i + 1));
        h += (frobenius_power(dec.parts[i]) * y.pow(i + 1)).scale(inv);
    }
    return h;
}

BivariantForm pullback(const BivariantForm& psi, const Mobius& phi) {
    const long p = psi.f.field().characteristic();
    RationalFunction d = phi.derivative();
    return {phi.pullback(psi.f) * d / d.pow(p)};
}

Differential pullback(const Differential& omega, const Mobius& phi) {
    return {phi.pullback(omega.f) * phi.derivative()};
}

SemilinearMap global_tc_matrix(const GaloisField& F, const std::vector<Place>& points, const std::vector<int>& m) {
    if (points.size() != m.size()) throw RationalFunctionError("points and orders differ in length");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw RationalFunctionError("repeated place in zero/pole pattern");
    const int p = static_cast<int>(F.characteristic());

    int source_deg = 2 * p - 2, target_deg = 0;
    RationalFunction source_twist = RationalFunction::constant(F, 1);
    RationalFunction target_untwist = RationalFunction::constant(F, 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        source_deg += m[i];
        target_deg += ceil_div(m[i], p);
        if (points[i].infinite) continue;
        RationalFunction lin(Polynomial::linear(F, points[i].value));
        source_twist *= lin.pow(-m[i]);
        target_untwist *= lin.pow(ceil_div(m[i], p));
    }

    SemilinearMap out;
    out.field = &F;
    out.source_dim = std::max(source_deg + 1, 0);
    out.target_dim = std::max(target_deg + 1, 0);
    out.matrix.assign(static_cast<std::size_t>(out.target_dim), std::vector<std::uint32_t>(out.source_dim, 0));
    const auto y = RationalFunction::variable(F);
    // tc(y^(pq+r) s) = y^q tc(y^r s), so p evaluations cover every column.
    std::vector<RationalFunction> base;
    for (int r = 0; r < std::min(p, out.source_dim); ++r)
        base.push_back(twisted_cartier({y.pow(r) * source_twist}) * target_untwist);
    for (int j = 0; j < out.source_dim; ++j) {
        RationalFunction image = base[j % p] * y.pow(j / p);
        if (image.is_zero()) continue;
        if (!image.is_polynomial() || image.num().degree() > target_deg)
            throw RationalFunctionError("twisted Cartier image leaves the target space: " + image.to_string());
        for (int r = 0; r <= image.num().degree(); ++r) out.matrix[r][j] = image.num().coeff(r);
    }
    Matrix lin = out.matrix;
    for (auto& row : lin)
        for (auto& x : row) x = F.frobenius(x);
    out.rank = matrix_rank(std::move(lin), F);
    return out;
}

}  // namespace lhur
