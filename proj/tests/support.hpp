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

// Shared fixtures and independent reference arithmetic for the test suites.

#ifndef HYPERBMS_TESTS_SUPPORT_HPP
#define HYPERBMS_TESTS_SUPPORT_HPP

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "hyperbms/field.hpp"
#include "hyperbms/grid.hpp"
#include "hyperbms/polynomial.hpp"
#include "hyperbms/table.hpp"

namespace hbms {

inline void PrintTo(const Element& x, std::ostream* os) { *os << (x.field() ? x.str() : "<null>"); }

}  // namespace hbms

namespace hbms::testing {

inline std::shared_ptr<const Field> gf16() {
    static const auto field = Field::create(2, 4);
    return field;
}

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(HBMS_TEST_DATA) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline IncompleteTable worked_example() { return parse_table(read_data("worked_example.tbl")); }

/// GF(2)[x] multiplication of nibbles reduced by x^4 + x + 1, no tables involved.
inline std::uint32_t gf16_mul_bits(std::uint32_t x, std::uint32_t y) {
    std::uint32_t acc = 0;
    for (int i = 0; i < 4; ++i)
        if (y >> i & 1u) acc ^= x << i;
    for (int i = 7; i >= 4; --i)
        if (acc >> i & 1u) acc ^= 0x13u << (i - 4);
    return acc;
}

/// Bitmask of the polynomial form of an element.
inline std::uint32_t bits_of(const Field& field, const Element& x) {
    std::uint32_t out = 0;
    const auto coeffs = field.to_poly(x);
    for (std::size_t i = 0; i < coeffs.size(); ++i) out |= (coeffs[i] & 1u) << i;
    return out;
}

/// a^k as a bitmask by repeated multiplication by x.
inline std::uint32_t gf16_power_bits(std::int64_t k) {
    k %= 15;
    if (k < 0) k += 15;
    std::uint32_t acc = 1;
    for (std::int64_t i = 0; i < k; ++i) acc = gf16_mul_bits(acc, 2);
    return acc;
}

/// Terms c_m X^m of a generator, with c_m = a^log.
struct Term {
    IndexPair m;
    int log;
};

/// u_n = sum_m c_m a^{3((tau+n).m)} on the 5 x 5 table over GF(16), written out with raw exponents.
inline CellGrid syndrome_by_hand(const std::vector<Term>& terms, IndexPair tau = {0, 0}) {
    const auto& L = *gf16();
    CellGrid u({5, 5});
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            Element v = L.zero();
            for (const auto& [m, c] : terms) v += L.exp(c + 3 * ((tau.n1 + i) * m.n1 + (tau.n2 + j) * m.n2));
            u.set({i, j}, v);
        }
    return u;
}

/// Random generator over GF(16) on the 5 x 5 grid with distinct support points.
template <class Rng>
std::vector<Term> random_terms(Rng& rng, int weight, bool base_field = false) {
    std::uniform_int_distribution<int> coord(0, 4), coef(0, 14);
    std::vector<Term> out;
    while (static_cast<int>(out.size()) < weight) {
        const IndexPair m{coord(rng), coord(rng)};
        bool dup = false;
        for (const auto& t : out) dup = dup || t.m == m;
        if (!dup) out.push_back({m, base_field ? 0 : coef(rng)});
    }
    return out;
}

inline Polynomial poly_of(const std::vector<Term>& terms) {
    Polynomial f(*gf16());
    for (const auto& [m, c] : terms) f.set(m, gf16()->exp(c));
    return f;
}

}  // namespace hbms::testing

#endif  // HYPERBMS_TESTS_SUPPORT_HPP
