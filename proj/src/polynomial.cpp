/*
   Copyright 2026 The hyperbms Authors

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

#include "hyperbms/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

namespace hbms {

Polynomial Polynomial::constant(const Field& field, const Element& c) { return monomial(field, {0, 0}, c); }

Polynomial Polynomial::monomial(const Field& field, const IndexPair& exponent, const Element& c) {
    Polynomial p(field);
    p.set(exponent, c);
    return p;
}

Polynomial Polynomial::binomial_minus_one(const Field& field, const IndexPair& exponent) {
    Polynomial p(field);
    p.add_term(exponent, field.one());
    p.add_term({0, 0}, -field.one());
    return p;
}

void Polynomial::check_field(const Polynomial& o) const {
    if (field_ != o.field_) throw FieldError("polynomials over different fields");
}

Element Polynomial::coeff(const IndexPair& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? field_->zero() : it->second;
}

void Polynomial::set(const IndexPair& exponent, const Element& c) {
    if (!exponent.nonnegative()) throw Error("negative exponent " + exponent.str());
    field_->check_same(c);
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

void Polynomial::add_term(const IndexPair& exponent, const Element& c) { set(exponent, coeff(exponent) + c); }

IndexPair Polynomial::leading_power(OrderKind order) const {
    if (terms_.empty()) throw Error("leading power of the zero polynomial");
    auto best = terms_.begin()->first;
    for (const auto& [m, c] : terms_)
        if (less_total(best, m, order)) best = m;
    return best;
}

Element Polynomial::leading_coeff(OrderKind order) const { return coeff(leading_power(order)); }

Polynomial Polynomial::monic(OrderKind order) const { return *this * leading_coeff(order).inv(); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_field(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_field(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_field(o);
    Polynomial r(*field_);
    for (const auto& [m, c] : terms_)
        for (const auto& [n, d] : o.terms_) r.add_term(m + n, c * d);
    return r;
}

Polynomial Polynomial::operator*(const Element& c) const {
    field_->check_same(c);
    Polynomial r(*field_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

Polynomial Polynomial::shifted(const IndexPair& shift) const {
    if (!shift.nonnegative()) throw Error("negative monomial shift " + shift.str());
    Polynomial r(*field_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m + shift, c);
    return r;
}

Element Polynomial::evaluate(const Element& x1, const Element& x2) const {
    Element sum = field_->zero();
    for (const auto& [m, c] : terms_) sum += c * x1.pow(m.n1) * x2.pow(m.n2);
    return sum;
}

std::string Polynomial::str(OrderKind order) const {
    if (terms_.empty()) return "0";
    std::vector<IndexPair> exps;
    for (const auto& [m, c] : terms_) exps.push_back(m);
    std::sort(exps.begin(), exps.end(), [order](auto& a, auto& b) { return less_total(b, a, order); });
    std::string out;
    for (const auto& m : exps) {
        if (!out.empty()) out += " + ";
        const Element c = terms_.at(m);
        std::string term;
        if (!c.is_one() || (m.n1 == 0 && m.n2 == 0)) term = field_->format(c);
        auto factor = [&](const char* var, int e) {
            if (e == 0) return;
            if (!term.empty()) term += "*";
            term += var;
            if (e != 1) term += "^" + std::to_string(e);
        };
        factor("X1", m.n1);
        factor("X2", m.n2);
        out += term;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
    Polynomial poly(field);
    text = trim(text);
    if (text.empty()) throw ParseError("empty polynomial");
    if (text == "0") return poly;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t plus = text.find('+', pos);
        if (plus == std::string_view::npos) plus = text.size();
        const auto term = trim(text.substr(pos, plus - pos));
        if (term.empty()) throw ParseError("empty term in polynomial '" + std::string(text) + "'");
        Element coeff = field.one();
        IndexPair exp{0, 0};
        std::size_t fpos = 0;
        bool first = true;
        while (fpos <= term.size()) {
            std::size_t star = term.find('*', fpos);
            if (star == std::string_view::npos) star = term.size();
            const auto factor = trim(term.substr(fpos, star - fpos));
            if (factor.starts_with("X1") || factor.starts_with("X2")) {
                int* slot = factor[1] == '1' ? &exp.n1 : &exp.n2;
                auto rest = factor.substr(2);
                int e = 1;
                if (!rest.empty()) {
                    if (rest.front() != '^') throw ParseError("bad factor '" + std::string(factor) + "'");
                    rest.remove_prefix(1);
                    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), e);
                    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || e < 0)
                        throw ParseError("bad exponent in '" + std::string(factor) + "'");
                }
                *slot += e;
            } else if (first) {
                coeff = field.parse(factor);
            } else {
                throw ParseError("coefficient must come first in term '" + std::string(term) + "'");
            }
            first = false;
            fpos = star + 1;
        }
        poly.add_term(exp, coeff);
        pos = plus + 1;
    }
    return poly;
}

}  // namespace hbms
