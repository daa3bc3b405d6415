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

#ifndef LHUR_ASCOVER_HPP
#define LHUR_ASCOVER_HPP

#include <vector>

#include "lhur/ratfunc.hpp"

namespace lhur {

class CoverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// y^p - y = sum_i h_i(t_i) with t_i = 1/(x - b_i) at finite b_i and t = x
/// at infinity. Each h_i has zero constant term, no monomials t^k with p | k,
/// and degree e_i - 1.
class ArtinSchreierCover {
public:
    const GaloisField& field() const noexcept { return *field_; }
    /// Finite branch points by index, infinity last.
    const std::vector<Place>& branch_points() const noexcept { return branch_; }
    const std::vector<Polynomial>& parts() const noexcept { return parts_; }
    const std::vector<Place>& marked() const noexcept { return marked_; }

    std::vector<int> conductors() const;
    int genus() const;
    /// The right-hand side g(x).
    RationalFunction rhs() const;

    bool operator==(const ArtinSchreierCover& o) const {
        return field_ == o.field_ && branch_ == o.branch_ && parts_ == o.parts_ && marked_ == o.marked_;
    }

private:
    friend ArtinSchreierCover from_equation(const RationalFunction&, const std::vector<Place>&);
    ArtinSchreierCover(const GaloisField& f) : field_(&f) {}

    const GaloisField* field_;
    std::vector<Place> branch_;
    std::vector<Polynomial> parts_;
    std::vector<Place> marked_;
};

/// Reduces g to normal form: p-th power pole terms are traded for lower ones
/// through y -> y + c (x - b)^(-j/p), and the constant is dropped.
ArtinSchreierCover from_equation(const RationalFunction& rhs, const std::vector<Place>& marks = {});

/// R(f) = sum e_i (p - 1) [f^-1(b_i)], keyed by the branch point below.
Divisor ramification_divisor(const ArtinSchreierCover& c);

struct TraceOrder {
    Place branch;
    int plain;        // order of tau in a local frame (dx_loc)^v (x) d(pi)
    int logarithmic;  // order against (dx/x)^v (x) dy/y, i.e. plain + 1 - p
};

struct TraceForm {
    RationalFunction coefficient;  // -1/g'(x) in the (dx)^v (x) dy frame
    std::vector<TraceOrder> orders;
};

/// Orders are obtained from exact valuations: ord_P(y) = ord_b(g),
/// ord_P(dy) = ord_P(y) - 1 (since p does not divide it), the coefficient
/// contributes p * ord_b(1/g'), and the frame change at infinity adds 2p.
TraceForm trace_form(const ArtinSchreierCover& c);

struct ModuliDimension {
    int value;        // 2h/(p-1) + n - 1 - sum floor((e_i - 1)/p)
    int alternative;  // n + m - 3 + sum (e_i - 1 - floor((e_i - 1)/p))
};

ModuliDimension moduli_dimension(int p, int h, const std::vector<int>& e, int n);

/// Decides whether a Mobius map carrying the ordered special points (branch
/// points, then marks) of c1 to those of c2 transports one normal form onto
/// the other. Needs at least three special points.
bool isomorphic(const ArtinSchreierCover& c1, const ArtinSchreierCover& c2);

}  // namespace lhur

#endif  // LHUR_ASCOVER_HPP
