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
#include "lhur/ascover.hpp"

#include <random>

using namespace lhur;

namespace {

RationalFunction c(const GaloisField& f, std::uint32_t v) { return RationalFunction::constant(f, v); }

}  // namespace

TEST_CASE("covers built from equations") {
    const auto& f = GaloisField::get(2, 4);
    auto x = RationalFunction::variable(f);
    const std::uint32_t a = 6;
    auto j_family = from_equation(x.pow(-1) + (x - c(f, a)).pow(-1));
    CHECK(j_family.conductors() == std::vector<int>{2, 2});
    CHECK(j_family.genus() == 1);
    auto rd = ramification_divisor(j_family);
    CHECK(rd.at(Place::finite(0)) == 2);
    CHECK(rd.at(Place::finite(a)) == 2);

    auto ss = from_equation(x.pow(3));
    CHECK(ss.conductors() == std::vector<int>{4});
    CHECK(ss.genus() == 1);
    CHECK(ss.branch_points() == std::vector<Place>{Place::infinity()});
    CHECK(ramification_divisor(ss).at(Place::infinity()) == 4);

    auto g0 = from_equation(x.pow(-1));
    CHECK(g0.conductors() == std::vector<int>{2});
    CHECK(g0.genus() == 0);

    const auto& f3 = GaloisField::get(3, 1);
    auto x3 = RationalFunction::variable(f3);
    auto c3 = from_equation(x3.pow(-2));
    CHECK(c3.conductors() == std::vector<int>{3});
    CHECK(ramification_divisor(c3).at(Place::finite(0)) == 6);
    CHECK(c3.genus() == 1);
}

TEST_CASE("p-th power terms are absorbed") {
    const auto& f = GaloisField::get(2, 3);
    auto x = RationalFunction::variable(f);
    // x^4 + x^3 + 1/x^2 + 1 ~ x^3 + x^2 + x + 1/x ~ x^3 + 1/x  (up to y -> y + z)
    auto cov = from_equation(x.pow(4) + x.pow(3) + x.pow(-2) + c(f, 1));
    CHECK(cov.conductors() == std::vector<int>{2, 4});
    CHECK(cov.rhs() == x.pow(3) + x.pow(-1) + x);
    CHECK(from_equation(cov.rhs()) == cov);
    CHECK_THROWS_AS(from_equation(x.pow(2) + x + c(f, 3)), CoverError);
    CHECK_THROWS_AS(from_equation(x.pow(-1), {Place::finite(0)}), CoverError);
}

TEST_CASE("trace form orders") {
    const auto& f = GaloisField::get(2, 4);
    auto x = RationalFunction::variable(f);
    auto ss = trace_form(from_equation(x.pow(3)));
    CHECK(ss.coefficient == x.pow(-2));
    REQUIRE(ss.orders.size() == 1);
    CHECK(ss.orders[0].plain == 4);
    CHECK(ss.orders[0].logarithmic == 3);

    auto jf = trace_form(from_equation(x.pow(-1) + (x - c(f, 3)).pow(-1)));
    for (const auto& o : jf.orders) {
        CHECK(o.plain == 2);
        CHECK(o.logarithmic == 1);
    }
}

TEST_CASE("moduli dimension") {
    CHECK(moduli_dimension(2, 1, {2, 2}, 0).value == 1);
    CHECK(moduli_dimension(2, 1, {4}, 0).value == 0);
    CHECK(moduli_dimension(3, 1, {3}, 1).value == 1);
    auto d = moduli_dimension(5, 6, {3, 2}, 2);
    CHECK(d.value == d.alternative);
    CHECK_THROWS_AS(moduli_dimension(2, 2, {2, 2}, 0), CoverError);
    CHECK_THROWS_AS(moduli_dimension(3, 2, {4, 2}, 0), CoverError);
}

TEST_CASE("isomorphism of rigidified covers") {
    const auto& f = GaloisField::get(2, 4);
    auto x = RationalFunction::variable(f);
    auto c1 = from_equation(x.pow(-1) + (x - c(f, 5)).pow(-1), {Place::infinity()});
    auto c2 = from_equation(x.pow(-1) + (x - c(f, 7)).pow(-1), {Place::infinity()});
    CHECK(isomorphic(c1, c1));
    CHECK_FALSE(isomorphic(c1, c2));
    CHECK_THROWS_AS(isomorphic(from_equation(x.pow(3)), from_equation(x.pow(3))), CoverError);

    // Transport c1 along a Mobius map; the result is isomorphic to c1.
    Mobius phi{&f, 3, 1, 1, 0};
    Mobius inv = phi.inverse();
    std::vector<Place> marks;
    for (const auto& q : c1.marked()) marks.push_back(inv.apply(q));
    auto moved = from_equation(phi.pullback(c1.rhs()), marks);
    CHECK(isomorphic(moved, c1));
    CHECK(isomorphic(c1, moved));
}

TEST_CASE("random covers satisfy Riemann-Hurwitz and the different") {
    std::mt19937 rng(3);
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 1}}) {
        const auto& f = GaloisField::get(p, k);
        std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1);
        auto x = RationalFunction::variable(f);
        for (int it = 0; it < 50; ++it) {
            RationalFunction g(f);
            for (int t = 0; t < 3; ++t) {
                std::uint32_t b = coef(rng);
                int j = 1 + static_cast<int>(coef(rng) % 5);
                g += (x - c(f, b)).pow(-j).scale(coef(rng));
            }
            g += x.pow(static_cast<long>(coef(rng) % 4)).scale(coef(rng));
            ArtinSchreierCover cov = [&] {
                try {
                    return from_equation(g);
                } catch (const CoverError&) {
                    return from_equation(x.pow(-1));
                }
            }();
            auto e = cov.conductors();
            int sum = 0, deg_r = 0;
            for (int ei : e) {
                CHECK(ei % p != 1);
                sum += ei;
            }
            for (auto [q, o] : ramification_divisor(cov)) deg_r += o;
            CHECK(deg_r == sum * (p - 1));
            CHECK(2 * cov.genus() - 2 == p * (-2) + deg_r);
            auto tf = trace_form(cov);
            for (std::size_t i = 0; i < e.size(); ++i) {
                CHECK(tf.orders[i].logarithmic == (e[i] - 1) * (p - 1));
                CHECK(tf.orders[i].plain == e[i] * (p - 1));
            }
            CHECK(from_equation(cov.rhs()) == cov);
        }
    }
}
