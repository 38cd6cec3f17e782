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

#include "hyperbms/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hbms {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Standard primitive trinomials/pentanomials over GF(2), indexed by degree.
constexpr std::uint32_t kBinaryPrimitive[] = {
    0,        0x3,      0x7,      0xB,      0x13,     0x25,     0x43,
    0x89,     0x11D,    0x211,    0x409,    0x805,    0x1053,   0x201B,
    0x4443,   0x8003,   0x1100B,  0x20009,  0x40081,  0x80027,  0x100009,
};

std::vector<std::uint32_t> bits_to_coeffs(std::uint64_t mask) {
    std::vector<std::uint32_t> c;
    while (mask) {
        c.push_back(static_cast<std::uint32_t>(mask & 1u));
        mask >>= 1;
    }
    return c;
}

void strip(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw FieldError("no inverse mod p");
}

// Remainder of a modulo b over GF(p); b nonzero.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    strip(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() > db) {
        const std::uint32_t factor = (a.back() * lead_inv) % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - (factor * b[i]) % p)) % p;
        strip(a);
    }
    return a;
}

// Cycle length of x modulo a monic polynomial, capped at `cap` (0 when x^k never returns to 1).
std::uint32_t x_order(const std::vector<std::uint32_t>& modulus, std::uint32_t p, std::uint32_t cap) {
    const std::size_t d = modulus.size() - 1;
    std::vector<std::uint32_t> cur(d, 0);
    cur[0] = 1;
    for (std::uint32_t k = 1; k <= cap; ++k) {
        std::uint32_t carry = cur[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry)
            for (std::size_t i = 0; i < d; ++i) cur[i] = (cur[i] + (p - (carry * modulus[i]) % p)) % p;
        if (cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](auto c) { return c == 0; }))
            return k;
    }
    return 0;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= b;
        if (r > (1ull << 32)) throw FieldError("field too large");
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

namespace gfp {

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    std::vector<std::uint32_t> f = poly;
    strip(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    // Trial division by every monic polynomial of degree 1 .. deg/2.
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        const std::uint32_t count = ipow(p, static_cast<std::uint32_t>(dd));
        std::vector<std::uint32_t> divisor(dd + 1, 0);
        divisor[dd] = 1;
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            std::uint32_t v = idx;
            for (std::size_t i = 0; i < dd; ++i) {
                divisor[i] = v % p;
                v /= p;
            }
            if (poly_mod(f, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree) {
    if (degree == 0) throw FieldError("field degree must be positive");
    if (p == 2 && degree < std::size(kBinaryPrimitive)) return bits_to_coeffs(kBinaryPrimitive[degree]);
    const std::uint32_t q = ipow(p, degree);
    if (q > Field::max_order) throw FieldError("field larger than 2^20 elements");
    const std::uint32_t count = ipow(p, degree);
    std::vector<std::uint32_t> f(degree + 1, 0);
    f[degree] = 1;
    for (std::uint32_t idx = 1; idx < count; ++idx) {
        std::uint32_t v = idx;
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = v % p;
            v /= p;
        }
        if (f[0] == 0) continue;
        if (x_order(f, p, q - 1) == q - 1 && is_irreducible(f, p)) return f;
    }
    throw FieldError("no primitive polynomial found");
}

std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p) {
    text = trim(text);
    if (text.empty()) throw ParseError("empty modulus");
    if (text.starts_with("0x") || text.starts_with("0X")) {
        if (p != 2) throw ParseError("hex modulus only valid for p = 2");
        std::uint64_t mask = 0;
        auto body = text.substr(2);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), mask, 16);
        if (ec != std::errc() || ptr != body.data() + body.size() || mask == 0)
            throw ParseError("bad hex modulus '" + std::string(text) + "'");
        return bits_to_coeffs(mask);
    }
    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto tok = trim(text.substr(pos, comma - pos));
        std::uint32_t c = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), c);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || c >= p)
            throw ParseError("bad modulus coefficient '" + std::string(tok) + "'");
        coeffs.push_back(c);
        pos = comma + 1;
    }
    return coeffs;
}

std::string format_modulus(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
    std::ostringstream out;
    if (p == 2 && poly.size() <= 32) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < poly.size(); ++i)
            if (poly[i]) mask |= (1ull << i);
        out << "0x" << std::hex << std::uppercase << mask;
        return out.str();
    }
    for (std::size_t i = 0; i < poly.size(); ++i) out << (i ? "," : "") << poly[i];
    return out.str();
}

}  // namespace gfp

// ---------------------------------------------------------------------------

std::shared_ptr<const Field> Field::create(FieldSpec spec) {
    return std::shared_ptr<const Field>(new Field(std::move(spec)));
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t degree) {
    FieldSpec spec;
    spec.p = p;
    spec.base_exponent = 1;
    spec.extension_degree = degree;
    return create(std::move(spec));
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    const std::uint32_t p = spec_.p;
    if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    if (spec_.base_exponent == 0 || spec_.extension_degree == 0) throw FieldError("field degrees must be positive");
    if (spec_.generator_label.empty()) throw FieldError("empty generator label");
    const std::uint32_t deg = spec_.degree();
    const std::uint64_t order = [&] {
        std::uint64_t r = 1;
        for (std::uint32_t i = 0; i < deg; ++i) {
            r *= p;
            if (r > max_order) throw FieldError("field larger than 2^20 elements");
        }
        return r;
    }();
    order_ = static_cast<std::uint32_t>(order);
    base_order_ = ipow(p, spec_.base_exponent);

    if (spec_.modulus.empty()) spec_.modulus = gfp::default_modulus(p, deg);
    auto& mod = spec_.modulus;
    strip(mod);
    if (mod.size() != deg + 1) throw FieldError("modulus degree does not match field degree");
    for (auto c : mod)
        if (c >= p) throw FieldError("modulus coefficient out of range");
    if (mod.back() != 1) throw FieldError("modulus must be monic");
    if (!gfp::is_irreducible(mod, p)) throw FieldError("modulus is reducible");

    const std::uint32_t n = order_ - 1;
    exp_.assign(n, 0);
    log_.assign(order_, -1);
    // Packed polynomial form: base-p digits, digit i = coefficient of x^i.
    std::vector<std::uint32_t> cur(deg, 0);
    cur[0] = 1;
    auto pack = [&](const std::vector<std::uint32_t>& v) {
        std::uint32_t r = 0;
        for (std::size_t i = deg; i-- > 0;) r = r * p + v[i];
        return r;
    };
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t packed = pack(cur);
        if (log_[packed] >= 0) throw FieldError("generator is not primitive for this modulus");
        exp_[k] = packed;
        log_[packed] = static_cast<std::int32_t>(k);
        const std::uint32_t carry = cur[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry)
            for (std::size_t i = 0; i < deg; ++i) cur[i] = (cur[i] + (p - (carry * mod[i]) % p)) % p;
    }

    auto add_packed = [&](std::uint32_t a, std::uint32_t b) {
        if (p == 2) return a ^ b;
        std::uint32_t r = 0, scale = 1;
        for (std::uint32_t i = 0; i < deg; ++i) {
            r += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        return r;
    };
    zech_.assign(n, -1);
    for (std::uint32_t k = 0; k < n; ++k) zech_[k] = log_[add_packed(exp_[k], 1)];
}

void Field::check_same(const Element& x) const {
    if (x.field_ != this) throw FieldError("element belongs to a different field");
}

Element Field::exp(std::int64_t k) const {
    const std::int64_t n = unit_order();
    std::int64_t r = k % n;
    if (r < 0) r += n;
    return {this, static_cast<std::int32_t>(r)};
}

Element Field::from_int(std::int64_t k) const {
    std::int64_t r = k % static_cast<std::int64_t>(spec_.p);
    if (r < 0) r += spec_.p;
    return {this, log_[static_cast<std::uint32_t>(r)]};
}

Element Field::from_poly(const std::vector<std::uint32_t>& coeffs) const {
    const std::uint32_t deg = spec_.degree();
    if (coeffs.size() > deg) throw FieldError("polynomial form too long");
    std::uint32_t r = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= spec_.p) throw FieldError("coefficient out of range");
        r = r * spec_.p + coeffs[i];
    }
    return {this, log_[r]};
}

std::vector<std::uint32_t> Field::to_poly(const Element& x) const {
    check_same(x);
    std::vector<std::uint32_t> out(spec_.degree(), 0);
    if (x.is_zero()) return out;
    std::uint32_t v = exp_[static_cast<std::uint32_t>(x.log_)];
    for (auto& c : out) {
        c = v % spec_.p;
        v /= spec_.p;
    }
    return out;
}

Element Field::add(const Element& x, const Element& y) const {
    check_same(x);
    check_same(y);
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const std::int32_t n = static_cast<std::int32_t>(unit_order());
    std::int32_t d = y.log_ - x.log_;
    if (d < 0) d += n;
    const std::int32_t z = zech_[static_cast<std::uint32_t>(d)];
    if (z < 0) return zero();
    std::int32_t r = x.log_ + z;
    if (r >= n) r -= n;
    return {this, r};
}

Element Field::neg(const Element& x) const {
    check_same(x);
    if (x.is_zero() || spec_.p == 2) return x;
    return mul(x, exp(unit_order() / 2));
}

Element Field::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

Element Field::mul(const Element& x, const Element& y) const {
    check_same(x);
    check_same(y);
    if (x.is_zero() || y.is_zero()) return zero();
    std::int64_t r = static_cast<std::int64_t>(x.log_) + y.log_;
    if (r >= unit_order()) r -= unit_order();
    return {this, static_cast<std::int32_t>(r)};
}

Element Field::inv(const Element& x) const {
    check_same(x);
    if (x.is_zero()) throw FieldError("inverse of zero");
    return exp(-static_cast<std::int64_t>(x.log_));
}

Element Field::div(const Element& x, const Element& y) const { return mul(x, inv(y)); }

Element Field::pow(const Element& x, std::int64_t k) const {
    check_same(x);
    if (x.is_zero()) {
        if (k < 0) throw FieldError("negative power of zero");
        return k == 0 ? one() : zero();
    }
    const std::int64_t n = unit_order();
    std::int64_t kk = k % n;
    if (kk < 0) kk += n;
    return exp((static_cast<std::int64_t>(x.log_) * kk) % n);
}

std::uint32_t Field::multiplicative_order(const Element& x) const {
    check_same(x);
    if (x.is_zero()) throw FieldError("zero has no multiplicative order");
    const std::uint32_t n = unit_order();
    return n / std::gcd(n, static_cast<std::uint32_t>(x.log_));
}

Element Field::root_of_unity(std::uint32_t r) const {
    if (r == 0 || unit_order() % r != 0)
        throw FieldError(std::to_string(r) + " does not divide |L*| = " + std::to_string(unit_order()));
    return exp(unit_order() / r);
}

bool Field::in_base_field(const Element& x) const {
    check_same(x);
    if (x.is_zero()) return true;
    const std::uint32_t step = unit_order() / (base_order_ - 1);
    return static_cast<std::uint32_t>(x.log_) % step == 0;
}

std::string Field::format(const Element& x) const {
    check_same(x);
    if (x.is_zero()) return "0";
    if (x.log_ == 0) return "1";
    if (x.log_ == 1) return spec_.generator_label;
    return spec_.generator_label + "^" + std::to_string(x.log_);
}

Element Field::parse(std::string_view text) const {
    const auto t = trim(text);
    if (t == "0") return zero();
    if (t == "1") return one();
    const auto& label = spec_.generator_label;
    if (!t.starts_with(label)) throw ParseError("bad field element '" + std::string(t) + "'");
    auto rest = t.substr(label.size());
    if (rest.empty()) return exp(1);
    if (rest.front() != '^') throw ParseError("bad field element '" + std::string(t) + "'");
    rest.remove_prefix(1);
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size())
        throw ParseError("bad exponent in '" + std::string(t) + "'");
    if (k < 0 || k >= static_cast<std::int64_t>(unit_order()))
        throw ParseError("exponent out of range in '" + std::string(t) + "'");
    return {this, static_cast<std::int32_t>(k)};
}

std::vector<Element> Field::elements() const {
    std::vector<Element> all;
    all.reserve(order_);
    all.push_back(zero());
    for (std::uint32_t k = 0; k < unit_order(); ++k) all.push_back({this, static_cast<std::int32_t>(k)});
    return all;
}

// ---------------------------------------------------------------------------

namespace {
const Field& field_of(const Element& a, const Element& b) {
    if (a.field() == nullptr || b.field() == nullptr) throw FieldError("uninitialized field element");
    if (a.field() != b.field()) throw FieldError("mixed fields");
    return *a.field();
}
const Field& field_of(const Element& a) {
    if (a.field() == nullptr) throw FieldError("uninitialized field element");
    return *a.field();
}
}  // namespace

Element Element::operator+(const Element& o) const { return field_of(*this, o).add(*this, o); }
Element Element::operator-(const Element& o) const { return field_of(*this, o).sub(*this, o); }
Element Element::operator-() const { return field_of(*this).neg(*this); }
Element Element::operator*(const Element& o) const { return field_of(*this, o).mul(*this, o); }
Element Element::operator/(const Element& o) const { return field_of(*this, o).div(*this, o); }
Element Element::inv() const { return field_of(*this).inv(*this); }
Element Element::pow(std::int64_t k) const { return field_of(*this).pow(*this, k); }
std::string Element::str() const { return field_ ? field_->format(*this) : "<null>"; }

}  // namespace hbms
