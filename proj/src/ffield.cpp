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

#include "lhur/ffield.hpp"

#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace lhur {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over GF(p); b must be nonzero.
Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    Coeffs d = b;
    trim(d);
    std::uint32_t lead_inv = 1;
    for (std::uint32_t t = 1; t < p; ++t)
        if ((t * d.back()) % p == 1) lead_inv = t;
    while (a.size() >= d.size()) {
        std::uint32_t c = (a.back() * lead_inv) % p;
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i)
            a[shift + i] = (a[shift + i] + p * p - c * d[i] % p) % p;
        trim(a);
    }
    return a;
}

// Multiplies two residues modulo m over GF(p).
Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint32_t p) {
    Coeffs r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

Coeffs index_to_coeffs(std::uint32_t idx, std::uint32_t p, std::uint32_t k) {
    Coeffs c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return c;
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    Coeffs f = poly;
    trim(f);
    if (f.size() < 2) return false;
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g = index_to_coeffs(static_cast<std::uint32_t>(idx), p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
    if (k == 1) return {0, 1};
    // Enumerate the k low coefficients in lexicographic order, constant term
    // most significant.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    Coeffs c(k, 0);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t rest = n;
        for (std::uint32_t i = k; i-- > 0;) {
            c[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        Coeffs f = c;
        f.push_back(1);
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw FieldError("no irreducible polynomial found");
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k), q_(1) {
    for (std::uint32_t i = 0; i < k; ++i) {
        pow_p_.push_back(q_);
        q_ *= p;
    }
    modulus_ = smallest_irreducible(p, k);

    // Find the smallest primitive element and build the antilog table from it.
    const std::uint32_t n = q_ - 1;
    log_.assign(q_, 0);
    exp_.assign(n, 0);
    for (std::uint32_t cand = 1; cand < q_; ++cand) {
        Coeffs g = index_to_coeffs(cand, p, k);
        Coeffs cur = {1};
        std::vector<bool> seen(q_, false);
        bool primitive = true;
        for (std::uint32_t e = 0; e < n; ++e) {
            Coeffs padded = cur;
            padded.resize(k, 0);
            std::uint32_t idx = 0;
            for (std::uint32_t i = k; i-- > 0;) idx = idx * p + padded[i];
            if (seen[idx]) {
                primitive = false;
                break;
            }
            seen[idx] = true;
            exp_[e] = idx;
            log_[idx] = e;
            cur = mul_mod(cur, g, modulus_, p);
        }
        if (primitive) break;
    }

    frob_.assign(q_, 0);
    root_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) frob_[a] = pow(a, p);
    std::int64_t root_exp = 1;
    for (std::uint32_t i = 0; i + 1 < k; ++i) root_exp *= p;
    for (std::uint32_t a = 0; a < q_; ++a) root_[a] = pow(a, root_exp);
}

const GaloisField& GaloisField::get(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw FieldError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order)
            throw FieldError("field " + std::to_string(p) + "^" + std::to_string(k) +
                             " exceeds the supported order 2^16");
    }
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, k}];
    if (!slot) slot.reset(new GaloisField(p, k));
    return *slot;
}

const GaloisField& GaloisField::parse(std::string_view s) {
    auto read = [&](std::string_view part) {
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
            throw FieldError("malformed field designator '" + std::string(s) + "'");
        return v;
    };
    auto caret = s.find('^');
    if (caret == std::string_view::npos) return get(read(s), 1);
    return get(read(s.substr(0, caret)), read(s.substr(caret + 1)));
}

std::string GaloisField::designator() const {
    return std::to_string(p_) + "^" + std::to_string(k_);
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = (a % p_ + b % p_) % p_;
        r += d * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return r;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
        std::uint32_t d = (p_ - a % p_) % p_;
        r += d * pow_p_[i];
        a /= p_;
    }
    return r;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return add(a, neg(b));
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
    if (a == 0) throw DivisionByZero();
    std::uint32_t l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::int64_t e) const {
    if (e == 0) return 1;
    if (a == 0) {
        if (e < 0) throw DivisionByZero();
        return 0;
    }
    const std::int64_t n = q_ - 1;
    std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t GaloisField::from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t a) const {
    return index_to_coeffs(a, p_, k_);
}

std::uint32_t GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < d.size() && i < k_; ++i) r += (d[i] % p_) * pow_p_[i];
    return r;
}

std::string GaloisField::render(std::uint32_t a) const {
    if (a < p_) return std::to_string(a);
    auto d = digits(a);
    std::string out;
    for (std::uint32_t i = k_; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += 'w';
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FieldElement::FieldElement(const GaloisField& f, std::uint32_t index) : field_(&f), value_(index) {
    if (index >= f.order())
        throw FieldError("index " + std::to_string(index) + " out of range for GF(" + f.designator() + ")");
}

void FieldElement::check_same(const FieldElement& o) const {
    if (field_ != o.field_)
        throw FieldError("mixed fields GF(" + field_->designator() + ") and GF(" + o.field_->designator() + ")");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->sub(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {*field_, field_->neg(value_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {*field_, field_->div(value_, o.value_)};
}
FieldElement FieldElement::inv() const { return {*field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {*field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius() const { return {*field_, field_->frobenius(value_)}; }
FieldElement FieldElement::pth_root() const { return {*field_, field_->pth_root(value_)}; }

std::vector<FieldElement> elements(const GaloisField& f) {
    std::vector<FieldElement> out;
    out.reserve(f.order());
    for (std::uint32_t i = 0; i < f.order(); ++i) out.emplace_back(f, i);
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols, const GaloisField& f) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const std::uint32_t inv = f.inv(m[row][c]);
        for (auto& x : m[row]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const std::uint32_t t = m[r][c];
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(t, m[row][j]));
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

int matrix_rank(Matrix m, const GaloisField& f) {
    if (m.empty()) return 0;
    return static_cast<int>(rref(m, m[0].size(), f).size());
}

std::vector<std::vector<std::uint32_t>> null_space(Matrix m, std::size_t cols, const GaloisField& f) {
    auto pivots = rref(m, cols, f);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lhur
