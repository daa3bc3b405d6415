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

#ifndef LHUR_RATFUNC_HPP
#define LHUR_RATFUNC_HPP

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lhur/ffield.hpp"

namespace lhur {

class RationalFunctionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a denominator has an irreducible factor of degree > 1.
class NonSplitError : public RationalFunctionError {
public:
    explicit NonSplitError(std::string factor)
        : RationalFunctionError("denominator does not split: irreducible factor " + factor),
          factor_(std::move(factor)) {}
    const std::string& factor() const noexcept { return factor_; }

private:
    std::string factor_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// Degree of the zero polynomial.
inline constexpr int neg_infinity = INT_MIN;

/// Dense univariate polynomial over an interned GaloisField, lowest
/// coefficient first, with no trailing zeros.
class Polynomial {
public:
    explicit Polynomial(const GaloisField& f) : field_(&f) {}
    Polynomial(const GaloisField& f, std::vector<std::uint32_t> coeffs);

    static Polynomial constant(const GaloisField& f, std::uint32_t c);
    static Polynomial monomial(const GaloisField& f, std::uint32_t c, int deg);
    static Polynomial variable(const GaloisField& f) { return monomial(f, 1, 1); }
    /// y - a
    static Polynomial linear(const GaloisField& f, std::uint32_t a);

    const GaloisField& field() const noexcept { return *field_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return c_.empty() ? neg_infinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::uint32_t coeff(int i) const noexcept {
        return i >= 0 && static_cast<std::size_t>(i) < c_.size() ? c_[i] : 0;
    }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    /// Lowest exponent with nonzero coefficient (order of vanishing at 0).
    int valuation() const noexcept;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(std::uint32_t c) const;
    Polynomial shift(int n) const;  // multiply by y^n, n >= 0
    Polynomial pow(unsigned n) const;
    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
    Polynomial monic() const;
    Polynomial derivative() const;
    std::uint32_t eval(std::uint32_t a) const;
    /// Substitutes y -> y + a.
    Polynomial taylor_shift(std::uint32_t a) const;
    /// Applies an index map to every coefficient (Frobenius, roots).
    template <class F>
    Polynomial map_coeffs(F fn) const {
        std::vector<std::uint32_t> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = fn(c_[i]);
        return Polynomial(*field_, std::move(out));
    }

    bool operator==(const Polynomial& o) const noexcept { return field_ == o.field_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const noexcept { return !(*this == o); }

    std::string to_string(char var = 'y') const;

private:
    void trim();
    void check_same(const Polynomial& o) const;

    const GaloisField* field_;
    std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Distinct roots of a polynomial in GF(q), found by exhaustive evaluation,
/// each with its multiplicity. The second member is the cofactor without
/// linear factors.
std::pair<std::vector<std::pair<std::uint32_t, int>>, Polynomial> split_linear(const Polynomial& f);

/// A point of P^1 over GF(q): a field index or infinity.
struct Place {
    bool infinite = false;
    std::uint32_t value = 0;

    static Place finite(std::uint32_t a) { return {false, a}; }
    static Place infinity() { return {true, 0}; }

    friend bool operator==(const Place&, const Place&) = default;
    /// Finite places by index, infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite != b.infinite) return b.infinite;
        return a.value < b.value;
    }
    std::string to_string(const GaloisField& f) const { return infinite ? "inf" : f.render(value); }
};

using Divisor = std::map<Place, int>;

class RationalFunction {
public:
    explicit RationalFunction(const GaloisField& f) : num_(f), den_(Polynomial::constant(f, 1)) {}
    RationalFunction(const Polynomial& num);  // NOLINT: polynomials are rational functions
    RationalFunction(const Polynomial& num, const Polynomial& den);

    static RationalFunction constant(const GaloisField& f, std::uint32_t c) {
        return RationalFunction(Polynomial::constant(f, c));
    }
    static RationalFunction variable(const GaloisField& f) { return RationalFunction(Polynomial::variable(f)); }

    const GaloisField& field() const noexcept { return num_.field(); }
    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }
    /// Value of a constant function.
    std::uint32_t constant_value() const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator-() const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction scale(std::uint32_t c) const;
    RationalFunction pow(long n) const;
    RationalFunction derivative() const;
    /// f(g), substituting g for the variable.
    RationalFunction compose(const RationalFunction& g) const;
    RationalFunction map_coeffs_frobenius() const;

    /// Zero order (positive) or pole order (negative); throws for f = 0.
    int order_at(const Place& q) const;
    /// Value at a place, or nullopt at a pole.
    std::optional<std::uint32_t> value_at(const Place& q) const;
    /// Full divisor; throws NonSplitError if num or den has a nonlinear
    /// irreducible factor.
    Divisor divisor() const;

    bool operator==(const RationalFunction& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const noexcept { return !(*this == o); }

    std::string to_string(char var = 'y') const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

/// f = poly + sum a / (y - b)^j
struct PartialFractions {
    struct Term {
        std::uint32_t b;
        int j;
        std::uint32_t a;
        friend bool operator==(const Term&, const Term&) = default;
    };
    Polynomial poly;
    std::vector<Term> terms;  // sorted by (b, j)

    RationalFunction recombine() const;
};

PartialFractions partial_fractions(const RationalFunction& f);

/// y -> (a y + b) / (c y + d) with ad - bc != 0.
struct Mobius {
    const GaloisField* field;
    std::uint32_t a, b, c, d;

    static Mobius identity(const GaloisField& f) { return {&f, 1, 0, 0, 1}; }
    /// The unique map sending 0, 1, infinity to the three given distinct places.
    static Mobius from_three(const GaloisField& f, const Place& p0, const Place& p1, const Place& pinf);

    Place apply(const Place& q) const;
    Mobius inverse() const;
    /// this after other
    Mobius compose(const Mobius& other) const;
    RationalFunction as_function() const;
    /// f composed with this map.
    RationalFunction pullback(const RationalFunction& f) const { return f.compose(as_function()); }
    /// Derivative of the map as a rational function.
    RationalFunction derivative() const { return as_function().derivative(); }
};

/// Parses `+ - * / ^ ( )`, integers, the generator `w`, the variable and any
/// bound names. Exponents are (possibly negative) integers.
RationalFunction parse_rational(std::string_view text, const GaloisField& f,
                                const std::map<std::string, std::uint32_t>& bindings = {}, char var = 'y');

/// Parses a field element written in generator notation ("w^2+1", "3").
std::uint32_t parse_element(std::string_view text, const GaloisField& f,
                            const std::map<std::string, std::uint32_t>& bindings = {});

}  // namespace lhur

#endif  // LHUR_RATFUNC_HPP
