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

#include "lhur/ascover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lhur {

namespace {

// Removes monomials c t^j with p | j by the substitution y -> y + c^(1/p) t^(j/p).
void reduce_pth_powers(std::vector<std::uint32_t>& a, const GaloisField& f) {
    const std::size_t p = f.characteristic();
    for (std::size_t j = a.size(); j-- > 1;) {
        if (j % p != 0 || a[j] == 0) continue;
        a[j / p] = f.add(a[j / p], f.pth_root(a[j]));
        a[j] = 0;
    }
    a[0] = 0;
}

}  // namespace

std::vector<int> ArtinSchreierCover::conductors() const {
    std::vector<int> e;
    for (const auto& h : parts_) e.push_back(h.degree() + 1);
    return e;
}

int ArtinSchreierCover::genus() const {
    auto e = conductors();
    const int p = static_cast<int>(field_->characteristic());
    return (std::accumulate(e.begin(), e.end(), 0) - 2) * (p - 1) / 2;
}

RationalFunction ArtinSchreierCover::rhs() const {
    const GaloisField& f = *field_;
    RationalFunction g(f);
    for (std::size_t i = 0; i < branch_.size(); ++i) {
        RationalFunction t = branch_[i].infinite ? RationalFunction::variable(f)
                                                 : RationalFunction(Polynomial::linear(f, branch_[i].value)).pow(-1);
        g += RationalFunction(parts_[i]).compose(t);
    }
    return g;
}

ArtinSchreierCover from_equation(const RationalFunction& rhs, const std::vector<Place>& marks) {
    const GaloisField& f = rhs.field();
    PartialFractions pf = partial_fractions(rhs);

    std::map<std::uint32_t, std::vector<std::uint32_t>> local;
    for (const auto& t : pf.terms) {
        auto& a = local[t.b];
        if (a.size() <= static_cast<std::size_t>(t.j)) a.resize(t.j + 1, 0);
        a[t.j] = t.a;
    }

    ArtinSchreierCover c(f);
    for (auto& [b, a] : local) {
        reduce_pth_powers(a, f);
        Polynomial h(f, a);
        if (h.is_zero()) continue;
        c.branch_.push_back(Place::finite(b));
        c.parts_.push_back(std::move(h));
    }
    std::vector<std::uint32_t> q = pf.poly.coeffs();
    if (!q.empty()) {
        reduce_pth_powers(q, f);
        Polynomial h(f, q);
        if (!h.is_zero()) {
            c.branch_.push_back(Place::infinity());
            c.parts_.push_back(std::move(h));
        }
    }
    if (c.branch_.empty())
        throw CoverError("right-hand side " + rhs.to_string('x') + " has no branch points after normalization");

    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (std::find(c.branch_.begin(), c.branch_.end(), marks[i]) != c.branch_.end())
            throw CoverError("marked point " + marks[i].to_string(f) + " is a branch point");
        for (std::size_t j = 0; j < i; ++j)
            if (marks[j] == marks[i]) throw CoverError("repeated marked point " + marks[i].to_string(f));
    }
    c.marked_ = marks;
    return c;
}

Divisor ramification_divisor(const ArtinSchreierCover& c) {
    const int p = static_cast<int>(c.field().characteristic());
    Divisor d;
    auto e = c.conductors();
    for (std::size_t i = 0; i < e.size(); ++i) d[c.branch_points()[i]] = e[i] * (p - 1);
    return d;
}

TraceForm trace_form(const ArtinSchreierCover& c) {
    const GaloisField& f = c.field();
    const int p = static_cast<int>(f.characteristic());
    RationalFunction g = c.rhs();
    RationalFunction dg = g.derivative();
    if (dg.is_zero()) throw CoverError("internal: g' vanishes for a normalized cover");
    TraceForm out{(-RationalFunction::constant(f, 1)) / dg, {}};
    for (const Place& b : c.branch_points()) {
        const int ord_y = g.order_at(b);  // y^p ~ g near the unique point above b
        if (ord_y >= 0 || ord_y % p == 0) throw CoverError("internal: pole order of g divisible by p at " + b.to_string(f));
        const int ord_dy = ord_y - 1;
        const int ord_coeff = p * out.coefficient.order_at(b);
        const int plain = ord_coeff + ord_dy + (b.infinite ? 2 * p : 0);
        out.orders.push_back({b, plain, plain + 1 - p});
    }
    return out;
}

ModuliDimension moduli_dimension(int p, int h, const std::vector<int>& e, int n) {
    if (p < 2 || !is_prime(static_cast<std::uint32_t>(p))) throw CoverError("p must be prime");
    if (n < 0 || h < 0) throw CoverError("negative genus or marking count");
    int sum = 0, floors = 0, alt = 0;
    for (int ei : e) {
        if (ei < 2 || ei % p == 1) throw CoverError("conductor " + std::to_string(ei) + " is congruent to 1 mod p");
        sum += ei;
        floors += (ei - 1) / p;
        alt += ei - 1 - (ei - 1) / p;
    }
    if ((2 * h) % (p - 1) != 0 || sum != 2 * h / (p - 1) + 2)
        throw CoverError("conductors do not satisfy sum e_i = 2h/(p-1) + 2");
    const int m = static_cast<int>(e.size());
    return {2 * h / (p - 1) + n - 1 - floors, n + m - 3 + alt};
}

namespace {

bool try_map(const ArtinSchreierCover& c1, const ArtinSchreierCover& c2, const Mobius& phi) {
    for (std::size_t i = 0; i < c1.marked().size(); ++i)
        if (phi.apply(c1.marked()[i]) != c2.marked()[i]) return false;
    std::vector<Place> image;
    for (const auto& b : c1.branch_points()) image.push_back(phi.apply(b));
    std::sort(image.begin(), image.end());
    if (image != c2.branch_points()) return false;
    // c2 in the coordinate of c1: x' = phi(x).
    ArtinSchreierCover moved = from_equation(phi.pullback(c2.rhs()), c1.marked());
    return moved == c1;
}

}  // namespace

bool isomorphic(const ArtinSchreierCover& c1, const ArtinSchreierCover& c2) {
    const GaloisField& f = c1.field();
    if (&f != &c2.field()) throw CoverError("covers over different fields");
    const std::size_t specials = c1.branch_points().size() + c1.marked().size();
    if (specials < 3 || c2.branch_points().size() + c2.marked().size() < 3)
        throw CoverError("unrigidified: fewer than three special points");
    if (c1.marked().size() != c2.marked().size() || c1.branch_points().size() != c2.branch_points().size())
        return false;
    auto e1 = c1.conductors(), e2 = c2.conductors();
    std::sort(e1.begin(), e1.end());
    std::sort(e2.begin(), e2.end());
    if (e1 != e2) return false;

    // Ordered special points: marks first (their images are forced), then
    // branch points (images range over the branch points of c2).
    std::vector<Place> src;
    for (const auto& q : c1.marked()) src.push_back(q);
    for (const auto& b : c1.branch_points()) src.push_back(b);
    const std::size_t nm = c1.marked().size();
    const auto& targets_b = c2.branch_points();

    std::vector<Place> img(3);
    std::vector<bool> used(targets_b.size(), false);
    // Depth-first choice of images for the first three special points.
    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == 3) {
            Mobius to2 = Mobius::from_three(f, img[0], img[1], img[2]);
            Mobius to1 = Mobius::from_three(f, src[0], src[1], src[2]);
            return try_map(c1, c2, to2.compose(to1.inverse()));
        }
        if (depth < nm) {
            img[depth] = c2.marked()[depth];
            return self(self, depth + 1);
        }
        for (std::size_t t = 0; t < targets_b.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            img[depth] = targets_b[t];
            bool ok = self(self, depth + 1);
            used[t] = false;
            if (ok) return true;
        }
        return false;
    };
    return search(search, 0);
}

}  // namespace lhur
