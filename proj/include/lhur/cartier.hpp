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

#ifndef LHUR_CARTIER_HPP
#define LHUR_CARTIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "lhur/ratfunc.hpp"

namespace lhur {

/// f = sum_i parts[i]^p y^i, i = 0 .. p-1.
struct PPowerDecomposition {
    std::vector<RationalFunction> parts;

    RationalFunction recombine() const;
};

PPowerDecomposition ppower_decompose(const RationalFunction& f);

/// omega = f dy
struct Differential {
    RationalFunction f;

    /// ord_q(f) at finite q, ord_inf(f) - 2 at infinity.
    int order_at(const Place& q) const;
    Divisor divisor() const;
};

/// psi = f dy/dx for the relative Frobenius x = y^p.
struct BivariantForm {
    RationalFunction f;

    /// Plain order: ord_q(f) at finite q, ord_inf(f) + 2p - 2 at infinity.
    int order_at(const Place& q) const;
    Divisor divisor() const;
    BivariantForm operator+(const BivariantForm& o) const { return {f + o.f}; }
};

Differential cartier(const Differential& omega);
RationalFunction twisted_cartier(const BivariantForm& psi);

enum class Classification { exact, quasi_exact, neither };
std::string to_string(Classification c);

bool is_exact(const BivariantForm& psi);
/// The nonzero constant value of the twisted Cartier image, if there is one.
std::optional<std::uint32_t> quasi_exact_witness(const BivariantForm& psi);
bool is_quasi_exact(const BivariantForm& psi);
Classification classify(const BivariantForm& psi);

/// The bivariant form h' dy/dx induced by dh.
BivariantForm exact_form(const RationalFunction& h);
/// u (h' + w^(p-1) w') / (w')^p dy/dx; its twisted Cartier image is u^(1/p).
/// Requires u != 0 and w' != 0.
BivariantForm quasi_exact_normal_form(std::uint32_t u, const RationalFunction& h, const RationalFunction& w);

/// Some h with dh = omega, or nullopt when the Cartier image is nonzero.
std::optional<RationalFunction> integrate(const Differential& omega);

/// Transport along y = phi(z): (f o phi) phi' / (phi')^p.
BivariantForm pullback(const BivariantForm& psi, const Mobius& phi);
Differential pullback(const Differential& omega, const Mobius& phi);

/// Matrix of the twisted Cartier operator on global sections, from forms with
/// div >= -sum m_i p_i to functions with div >= -sum ceil(m_i/p) p_i.
///
/// Column j is the image of the j-th source basis element
///   y^j prod_{finite p_i} (y - p_i)^(-m_i),  j = 0 .. deg E,
/// in the target basis y^j prod_{finite p_i} (y - p_i)^(-ceil(m_i/p)).
/// The map is p^(-1)-semilinear; `rank` is computed after applying
/// Frobenius to every entry.
struct SemilinearMap {
    const GaloisField* field;
    int source_dim = 0;
    int target_dim = 0;
    Matrix matrix;                // target_dim rows, source_dim columns
    int semilinearity_exponent = -1;
    int rank = 0;

    bool surjective() const { return rank == target_dim; }
    bool degenerate() const { return source_dim == 0; }
};

SemilinearMap global_tc_matrix(const GaloisField& f, const std::vector<Place>& points, const std::vector<int>& m);

}  // namespace lhur

#endif  // LHUR_CARTIER_HPP
