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

#ifndef LHUR_LOCI_HPP
#define LHUR_LOCI_HPP

#include <string>
#include <vector>

#include "lhur/cartier.hpp"

namespace lhur {

class LocusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LocusKind { exact, quasi_exact };
std::string to_string(LocusKind k);
LocusKind parse_locus_kind(const std::string& s);

/// Markings p_1 .. p_n on P^1, pairwise distinct.
using MarkingConfig = std::vector<Place>;

/// Throws unless sum m_i = 2p - 2 and n >= 3.
void check_pattern(const std::vector<int>& m, int p);

/// a + b eps over rational functions, eps^2 = 0.
struct DualRational {
    RationalFunction re;
    RationalFunction eps;

    DualRational operator*(const DualRational& o) const { return {re * o.re, re * o.eps + eps * o.re}; }
    DualRational inverse() const;
    DualRational pow(int n) const;
};

/// psi = prod over finite p_i of (y - p_i)^(m_i) dy/dx.
BivariantForm pattern_form(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m);

/// Applies y -> 1/(y - c) when one of the deformed markings p_1 .. p_(n-3)
/// sits at infinity; identity otherwise.
MarkingConfig normalize_finite(const GaloisField& f, const MarkingConfig& c);

bool locus_membership(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind);

struct TangentReport {
    int deformations = 0;   // n - 3
    int alpha_rank = 0;     // rank of the first-order forms omega_1j
    int tc_rank = 0;        // rank of their twisted Cartier images (constants adjoined for quasi-exact)
    int target_dim = 0;     // h^0(O(-sum floor(m_i/p) inf))
    int dimension = 0;      // kernel dimension
    /// Kernel basis in linear coordinates b; the deformation is a_j = b_j^p.
    std::vector<std::vector<std::uint32_t>> kernel;
};

/// Deforms p_1 .. p_(n-3) to first order, keeping the last three markings.
TangentReport tangent_space(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind);
int tangent_dimension(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind);

/// Recomputes the deformed form with a formal eps for a_j = b_j^p and checks
/// that its twisted Cartier image stays zero (exact) or constant (quasi-exact)
/// to first order.
bool first_order_consistent(const GaloisField& f, const MarkingConfig& c, const std::vector<int>& m, LocusKind kind,
                            const std::vector<std::uint32_t>& b);

/// n - 4 + sum floor(m_i/p) (exact), n - 3 + sum floor(m_i/p) (quasi-exact).
int dimension_formula(const std::vector<int>& m, int p, LocusKind kind);

struct Pin {
    std::size_t index;  // 0-based marking index
    Place place;
};

/// The last three markings at 0, 1, infinity.
std::vector<Pin> default_pins(std::size_t n);

/// All configurations over GF(q) in the locus with the given markings pinned,
/// in lexicographic order (finite places by index, infinity last).
std::vector<MarkingConfig> locus_search(const GaloisField& f, const std::vector<int>& m, LocusKind kind,
                                        const std::vector<Pin>& pins);

}  // namespace lhur

#endif  // LHUR_LOCI_HPP
