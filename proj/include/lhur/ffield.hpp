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

#ifndef LHUR_FFIELD_HPP
#define LHUR_FFIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lhur {

/// Raised for malformed field designators, unsupported sizes, and mixing
/// elements of different fields.
class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// GF(p^k) realised as GF(p)[w]/(modulus) with log/antilog tables.
///
/// Instances are interned: `GaloisField::get(p, k)` always returns the same
/// object, which lives for the rest of the program. Elements refer to their
/// field by pointer, so pointer equality is field equality.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k, comparing coefficients from the constant term upwards. An
/// element is stored as its index sum(c_i p^i) where c_i is the coefficient of
/// w^i.
class GaloisField {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    static const GaloisField& get(std::uint32_t p, std::uint32_t k);
    /// Parses "p^k" or "p".
    static const GaloisField& parse(std::string_view designator);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    /// Coefficients of the modulus, constant term first, length k + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    std::string designator() const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t neg(std::uint32_t a) const noexcept;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    /// Integer exponent, negative allowed for nonzero a; 0^0 = 1.
    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
    std::uint32_t frobenius(std::uint32_t a) const noexcept { return frob_[a]; }
    std::uint32_t pth_root(std::uint32_t a) const noexcept { return root_[a]; }
    /// Image of the integer n under Z -> GF(p).
    std::uint32_t from_int(std::int64_t n) const noexcept;
    /// Index of the generator w (equals p for k > 1, and is just 0 ... p-1 otherwise).
    std::uint32_t generator() const noexcept { return k_ > 1 ? p_ : 0; }
    std::vector<std::uint32_t> digits(std::uint32_t a) const;
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;
    /// "w^2+w+1" style rendering; prime-field elements render as integers.
    std::string render(std::uint32_t a) const;

    GaloisField(const GaloisField&) = delete;
    GaloisField& operator=(const GaloisField&) = delete;

private:
    GaloisField(std::uint32_t p, std::uint32_t k);

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;  // p^i for i < k
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> frob_;
    std::vector<std::uint32_t> root_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Monic irreducible polynomial used as modulus for GF(p^k), constant term first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Value type for an element of an interned GaloisField.
class FieldElement {
public:
    FieldElement(const GaloisField& f, std::uint32_t index);
    static FieldElement zero(const GaloisField& f) { return {f, 0}; }
    static FieldElement one(const GaloisField& f) { return {f, 1}; }
    static FieldElement from_int(const GaloisField& f, std::int64_t n) { return {f, f.from_int(n)}; }
    static FieldElement generator(const GaloisField& f) { return {f, f.generator()}; }

    const GaloisField& field() const noexcept { return *field_; }
    std::uint32_t index() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool is_one() const noexcept { return value_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }
    FieldElement inv() const;
    FieldElement pow(std::int64_t e) const;
    FieldElement frobenius() const;
    FieldElement pth_root() const;

    bool operator==(const FieldElement& o) const noexcept {
        return field_ == o.field_ && value_ == o.value_;
    }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }
    /// Orders by index; only meaningful within one field.
    bool operator<(const FieldElement& o) const noexcept { return value_ < o.value_; }

    std::string to_string() const { return field_->render(value_); }

private:
    void check_same(const FieldElement& o) const;

    const GaloisField* field_;
    std::uint32_t value_;
};

/// All elements of f in index order.
std::vector<FieldElement> elements(const GaloisField& f);

/// Dense matrix over GF(q), row-major, entries are element indices.
using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Rank by Gaussian elimination.
int matrix_rank(Matrix m, const GaloisField& f);
/// Basis of {v : m v = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<std::uint32_t>> null_space(Matrix m, std::size_t cols, const GaloisField& f);

}  // namespace lhur

#endif  // LHUR_FFIELD_HPP
