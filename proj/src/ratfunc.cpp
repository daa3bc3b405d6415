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

#include "lhur/ratfunc.hpp"

#include <algorithm>
#include <cctype>

namespace lhur {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const GaloisField& f, std::vector<std::uint32_t> coeffs) : field_(&f), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= f.order()) throw FieldError("coefficient index out of range");
    trim();
}

Polynomial Polynomial::constant(const GaloisField& f, std::uint32_t c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const GaloisField& f, std::uint32_t c, int deg) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(deg) + 1, 0);
    v[deg] = c;
    return Polynomial(f, std::move(v));
}

Polynomial Polynomial::linear(const GaloisField& f, std::uint32_t a) { return Polynomial(f, {f.neg(a), 1}); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Polynomial::check_same(const Polynomial& o) const {
    if (field_ != o.field_) throw FieldError("polynomials over different fields");
}

int Polynomial::valuation() const noexcept {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
    return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    return map_coeffs([this](std::uint32_t c) { return field_->neg(c); });
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Polynomial(*field_);
    std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::scale(std::uint32_t c) const {
    return map_coeffs([this, c](std::uint32_t a) { return field_->mul(a, c); });
}

Polynomial Polynomial::shift(int n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<std::uint32_t> r(static_cast<std::size_t>(n), 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(*field_, std::move(r));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(*field_, 1), base = *this;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
    check_same(d);
    if (d.is_zero()) throw DivisionByZero();
    std::vector<std::uint32_t> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {Polynomial(*field_), *this};
    std::vector<std::uint32_t> q(c_.size() - d.c_.size() + 1, 0);
    const std::uint32_t inv_lead = field_->inv(d.lead());
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        std::uint32_t c = rem[i];
        if (c == 0) continue;
        c = field_->mul(c, inv_lead);
        q[i - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = field_->sub(rem[i - dd + j], field_->mul(c, d.c_[j]));
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Polynomial(*field_, std::move(q)), Polynomial(*field_, std::move(rem))};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scale(field_->inv(lead()));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial(*field_);
    std::vector<std::uint32_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
    return Polynomial(*field_, std::move(r));
}

std::uint32_t Polynomial::eval(std::uint32_t a) const {
    std::uint32_t r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = field_->add(field_->mul(r, a), c_[i]);
    return r;
}

Polynomial Polynomial::taylor_shift(std::uint32_t a) const {
    Polynomial r(*field_);
    const Polynomial step(*field_, {a, 1});
    for (std::size_t i = c_.size(); i-- > 0;) r = r * step + constant(*field_, c_[i]);
    return r;
}

namespace {

std::string render_coeff(const GaloisField& f, std::uint32_t c) {
    std::string s = f.render(c);
    if (s.find('+') != std::string::npos) return "(" + s + ")";
    return s;
}

bool is_single_term(const Polynomial& p) {
    int n = 0;
    for (auto c : p.coeffs()) n += c != 0;
    if (n != 1) return false;
    return p.field().render(p.lead()).find('+') == std::string::npos;
}

}  // namespace

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += field_->render(c_[i]);
            continue;
        }
        if (c_[i] != 1) out += render_coeff(*field_, c_[i]) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::pair<std::vector<std::pair<std::uint32_t, int>>, Polynomial> split_linear(const Polynomial& f) {
    const GaloisField& F = f.field();
    std::vector<std::pair<std::uint32_t, int>> roots;
    Polynomial rest = f;
    for (std::uint32_t a = 0; a < F.order() && rest.degree() > 0; ++a) {
        int m = 0;
        while (rest.degree() > 0 && rest.eval(a) == 0) {
            rest = rest.divmod(Polynomial::linear(F, a)).first;
            ++m;
        }
        if (m) roots.emplace_back(a, m);
    }
    return {roots, rest};
}

// ---------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const Polynomial& num) : num_(num), den_(Polynomial::constant(num.field(), 1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
    if (&num.field() != &den.field()) throw FieldError("numerator and denominator over different fields");
    normalize();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    const GaloisField& f = num_.field();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(f, 1);
        return;
    }
    if (den_.degree() > 0) {
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
    }
    std::uint32_t l = f.inv(den_.lead());
    num_ = num_.scale(l);
    den_ = den_.scale(l);
}

std::uint32_t RationalFunction::constant_value() const {
    if (!is_constant()) throw RationalFunctionError("not a constant: " + to_string());
    return num_.coeff(0);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::scale(std::uint32_t c) const {
    RationalFunction r = *this;
    r.num_ = r.num_.scale(c);
    if (c == 0) r.den_ = Polynomial::constant(field(), 1);
    return r;
}

RationalFunction RationalFunction::pow(long n) const {
    if (n >= 0) return RationalFunction(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
    if (is_zero()) throw DivisionByZero();
    return RationalFunction(den_.pow(static_cast<unsigned>(-n)), num_.pow(static_cast<unsigned>(-n)));
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
    // N(P/Q)/D(P/Q) = [sum n_i P^i Q^(n-i)] Q^(m-n) / [sum d_i P^i Q^(m-i)]
    const GaloisField& f = field();
    const Polynomial& P = g.num();
    const Polynomial& Q = g.den();
    auto homog = [&](const Polynomial& h, int deg) {
        Polynomial acc(f);
        std::vector<Polynomial> ppow{Polynomial::constant(f, 1)}, qpow{Polynomial::constant(f, 1)};
        for (int i = 1; i <= deg; ++i) {
            ppow.push_back(ppow.back() * P);
            qpow.push_back(qpow.back() * Q);
        }
        for (int i = 0; i <= h.degree(); ++i)
            if (h.coeff(i)) acc = acc + (ppow[i] * qpow[deg - i]).scale(h.coeff(i));
        return std::pair{acc, qpow};
    };
    const int n = std::max(num_.degree(), 0), m = std::max(den_.degree(), 0);
    auto [top, qn] = homog(num_, n);
    auto [bot, qm] = homog(den_, m);
    if (m >= n) top = top * Q.pow(static_cast<unsigned>(m - n));
    else bot = bot * Q.pow(static_cast<unsigned>(n - m));
    return RationalFunction(top, bot);
}

RationalFunction RationalFunction::map_coeffs_frobenius() const {
    const GaloisField& f = field();
    auto fr = [&f](std::uint32_t c) { return f.frobenius(c); };
    return RationalFunction(num_.map_coeffs(fr), den_.map_coeffs(fr));
}

namespace {

int root_multiplicity(Polynomial h, std::uint32_t a) {
    int m = 0;
    const Polynomial lin = Polynomial::linear(h.field(), a);
    while (!h.is_zero() && h.eval(a) == 0) {
        h = h.divmod(lin).first;
        ++m;
    }
    return m;
}

}  // namespace

int RationalFunction::order_at(const Place& q) const {
    if (is_zero()) throw RationalFunctionError("the zero function has no order");
    if (q.infinite) return den_.degree() - num_.degree();
    return root_multiplicity(num_, q.value) - root_multiplicity(den_, q.value);
}

std::optional<std::uint32_t> RationalFunction::value_at(const Place& q) const {
    const GaloisField& f = field();
    if (q.infinite) {
        if (num_.degree() > den_.degree()) return std::nullopt;
        if (num_.degree() < den_.degree()) return 0u;
        return f.div(num_.lead(), den_.lead());
    }
    std::uint32_t d = den_.eval(q.value);
    if (d == 0) return std::nullopt;
    return f.div(num_.eval(q.value), d);
}

Divisor RationalFunction::divisor() const {
    if (is_zero()) throw RationalFunctionError("the zero function has no divisor");
    Divisor d;
    auto [zr, zrest] = split_linear(num_);
    if (zrest.degree() > 0) throw NonSplitError(zrest.monic().to_string());
    auto [pr, prest] = split_linear(den_);
    if (prest.degree() > 0) throw NonSplitError(prest.monic().to_string());
    for (auto [a, m] : zr) d[Place::finite(a)] += m;
    for (auto [a, m] : pr) d[Place::finite(a)] -= m;
    if (int o = order_at(Place::infinity()); o != 0) d[Place::infinity()] = o;
    return d;
}

std::string RationalFunction::to_string(char var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var), d = den_.to_string(var);
    if (!is_single_term(num_)) n = "(" + n + ")";
    if (!is_single_term(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------- partial fractions

PartialFractions partial_fractions(const RationalFunction& f) {
    const GaloisField& F = f.field();
    auto [q, r] = f.num().divmod(f.den());
    PartialFractions out{q, {}};
    if (r.is_zero()) return out;
    auto [roots, rest] = split_linear(f.den());
    if (rest.degree() > 0) throw NonSplitError(rest.monic().to_string());
    for (auto [b, m] : roots) {
        Polynomial E = f.den().divmod(Polynomial::linear(F, b).pow(static_cast<unsigned>(m))).first;
        Polynomial Rs = r.taylor_shift(b), Es = E.taylor_shift(b);
        const std::uint32_t e0inv = F.inv(Es.coeff(0));
        std::vector<std::uint32_t> c(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
            std::uint32_t acc = Rs.coeff(i);
            for (int t = 1; t <= i; ++t) acc = F.sub(acc, F.mul(Es.coeff(t), c[i - t]));
            c[i] = F.mul(acc, e0inv);
        }
        for (int j = 1; j <= m; ++j)
            if (c[m - j]) out.terms.push_back({b, j, c[m - j]});
    }
    return out;
}

RationalFunction PartialFractions::recombine() const {
    const GaloisField& F = poly.field();
    RationalFunction acc(poly);
    for (const auto& t : terms)
        acc += RationalFunction(Polynomial::constant(F, t.a), Polynomial::linear(F, t.b).pow(static_cast<unsigned>(t.j)));
    return acc;
}

// -------------------------------------------------------------------- Mobius

Mobius Mobius::from_three(const GaloisField& f, const Place& p0, const Place& p1, const Place& pinf) {
    if (p0 == p1 || p0 == pinf || p1 == pinf) throw RationalFunctionError("Mobius normalization needs distinct places");
    // psi sends p0, p1, pinf to 0, 1, infinity; we return its inverse.
    Mobius psi{&f, 0, 0, 0, 0};
    if (pinf.infinite) {
        std::uint32_t s = f.inv(f.sub(p1.value, p0.value));
        psi = {&f, s, f.neg(f.mul(s, p0.value)), 0, 1};
    } else if (p0.infinite) {
        psi = {&f, 0, f.sub(p1.value, pinf.value), 1, f.neg(pinf.value)};
    } else if (p1.infinite) {
        psi = {&f, 1, f.neg(p0.value), 1, f.neg(pinf.value)};
    } else {
        std::uint32_t u = f.sub(p1.value, pinf.value), v = f.sub(p1.value, p0.value);
        psi = {&f, u, f.neg(f.mul(u, p0.value)), v, f.neg(f.mul(v, pinf.value))};
    }
    return psi.inverse();
}

Place Mobius::apply(const Place& q) const {
    const GaloisField& f = *field;
    if (q.infinite) return c == 0 ? Place::infinity() : Place::finite(f.div(a, c));
    std::uint32_t n = f.add(f.mul(a, q.value), b), d = f.add(f.mul(c, q.value), this->d);
    if (d == 0) return Place::infinity();
    return Place::finite(f.div(n, d));
}

Mobius Mobius::inverse() const {
    const GaloisField& f = *field;
    return {field, d, f.neg(b), f.neg(c), a};
}

Mobius Mobius::compose(const Mobius& o) const {
    const GaloisField& f = *field;
    auto dot = [&f](std::uint32_t x, std::uint32_t y, std::uint32_t z, std::uint32_t w) {
        return f.add(f.mul(x, y), f.mul(z, w));
    };
    return {field, dot(a, o.a, b, o.c), dot(a, o.b, b, o.d), dot(c, o.a, d, o.c), dot(c, o.b, d, o.d)};
}

RationalFunction Mobius::as_function() const {
    const GaloisField& f = *field;
    return RationalFunction(Polynomial(f, {b, a}), Polynomial(f, {d, c}));
}

// -------------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(std::string_view s, const GaloisField& f, const std::map<std::string, std::uint32_t>& b, char var)
        : s_(s), f_(f), bind_(b), var_(var) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return r;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction acc = term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RationalFunction d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_++] - '0');
            if (e > 1'000'000) throw ParseError("exponent too large", start);
        }
        if (pos_ == start) throw ParseError("expected integer exponent", pos_);
        if (neg && base.is_zero()) throw ParseError("division by zero", start);
        return base.pow(neg ? -e : e);
    }

    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = (v * 10 + (s_[pos_++] - '0')) % static_cast<std::int64_t>(f_.characteristic());
            }
            return RationalFunction::constant(f_, f_.from_int(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (var_ && name == std::string(1, var_)) return RationalFunction::variable(f_);
            if (auto it = bind_.find(name); it != bind_.end()) {
                if (it->second >= f_.order()) throw ParseError("binding '" + name + "' outside the field", start);
                return RationalFunction::constant(f_, it->second);
            }
            if (name == "w") {
                if (f_.degree() == 1) throw ParseError("prime field has no generator w", start);
                return RationalFunction::constant(f_, f_.generator());
            }
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    const GaloisField& f_;
    const std::map<std::string, std::uint32_t>& bind_;
    char var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, const GaloisField& f,
                                const std::map<std::string, std::uint32_t>& bindings, char var) {
    return Parser(text, f, bindings, var).parse();
}

std::uint32_t parse_element(std::string_view text, const GaloisField& f,
                            const std::map<std::string, std::uint32_t>& bindings) {
    RationalFunction r = Parser(text, f, bindings, 0).parse();
    return r.constant_value();
}

}  // namespace lhur
