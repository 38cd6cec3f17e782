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

#ifndef HYPERBMS_FIELD_HPP
#define HYPERBMS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbms/error.hpp"

namespace hbms {

class Field;

/**
 * @brief Parameters of a finite field L = GF(q^m), q = p^e, built as GF(p)[x]/(modulus).
 *
 * The class of x is the generator; elements print as powers of it using `generator_label`.
 * An empty modulus selects the built-in default for (p, e*m).
 */
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t base_exponent = 1;     // q = p^base_exponent
    std::uint32_t extension_degree = 4;  // [L : GF(q)]
    std::vector<std::uint32_t> modulus;  // coefficients over GF(p), constant term first, monic
    std::string generator_label = "a";

    std::uint32_t degree() const { return base_exponent * extension_degree; }
};

/// Element of a Field in discrete-log form: zero, or a^k with 0 <= k < |L*|.
class Element {
  public:
    Element() = default;

    bool is_zero() const { return log_ < 0; }
    bool is_one() const { return log_ == 0; }
    /// Discrete log w.r.t. the field generator; -1 for zero.
    std::int32_t log() const { return log_; }
    const Field* field() const { return field_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element inv() const;
    Element pow(std::int64_t k) const;

    bool operator==(const Element& o) const { return field_ == o.field_ && log_ == o.log_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

  private:
    friend class Field;
    Element(const Field* f, std::int32_t log) : field_(f), log_(log) {}

    const Field* field_ = nullptr;
    std::int32_t log_ = -1;
};

/**
 * @brief Exact arithmetic in GF(p^D) through exp/log and Zech-log tables.
 *
 * Tables are built once at construction and never change; a Field is shared through
 * `std::shared_ptr<const Field>` and elements keep a raw pointer back to it, so the
 * owning pointer must outlive every element.
 */
class Field {
  public:
    static constexpr std::uint32_t max_order = 1u << 20;

    static std::shared_ptr<const Field> create(FieldSpec spec);
    /// Convenience: GF(p^degree) over the prime field with the default modulus.
    static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t degree);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t characteristic() const { return spec_.p; }
    /// |L|
    std::uint32_t order() const { return order_; }
    /// |L*| = |L| - 1
    std::uint32_t unit_order() const { return order_ - 1; }
    /// q, the size of the base field F.
    std::uint32_t base_order() const { return base_order_; }

    Element zero() const { return {this, -1}; }
    Element one() const { return {this, 0}; }
    Element generator() const { return exp(1); }
    /// a^k for any integer k (reduced mod |L*|).
    Element exp(std::int64_t k) const;
    /// Embeds an integer through the prime subfield (k mod p).
    Element from_int(std::int64_t k) const;
    /// Element whose polynomial form has coefficient vector `coeffs` (constant first).
    Element from_poly(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> to_poly(const Element& x) const;

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element mul(const Element& x, const Element& y) const;
    Element div(const Element& x, const Element& y) const;
    Element inv(const Element& x) const;
    Element pow(const Element& x, std::int64_t k) const;

    /// Multiplicative order of a nonzero element.
    std::uint32_t multiplicative_order(const Element& x) const;
    /// Primitive r-th root of unity a^((|L|-1)/r).
    Element root_of_unity(std::uint32_t r) const;
    /// True iff x lies in the base field F = GF(q).
    bool in_base_field(const Element& x) const;

    /// Text forms `0`, `1`, `a`, `a^k`.
    std::string format(const Element& x) const;
    Element parse(std::string_view text) const;

    /// Every element, zero first then a^0, a^1, ...
    std::vector<Element> elements() const;

    void check_same(const Element& x) const;

  private:
    explicit Field(FieldSpec spec);

    FieldSpec spec_;
    std::uint32_t order_ = 0;
    std::uint32_t base_order_ = 0;
    std::vector<std::uint32_t> exp_;   // log -> packed base-p digits of the polynomial form
    std::vector<std::int32_t> log_;    // packed polynomial form -> log, -1 for zero
    std::vector<std::int32_t> zech_;   // k -> log(1 + a^k), -1 when the sum vanishes
};

/// Monic polynomials over GF(p), coefficient vectors with the constant term first.
namespace gfp {

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);
/// Default modulus for GF(p^degree): fixed table for p = 2, else the first primitive
/// polynomial in counting order.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree);
/// Parses `0x13` (GF(2) bitmask) or `1,1,0,0,1` (constant term first).
std::vector<std::uint32_t> parse_modulus(std::string_view text, std::uint32_t p);
std::string format_modulus(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace gfp

}  // namespace hbms

#endif  // HYPERBMS_FIELD_HPP
