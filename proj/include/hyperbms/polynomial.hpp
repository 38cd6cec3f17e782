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

#ifndef HYPERBMS_POLYNOMIAL_HPP
#define HYPERBMS_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <string_view>

#include "hyperbms/field.hpp"
#include "hyperbms/lattice.hpp"

namespace hbms {

/**
 * @brief Sparse bivariate polynomial over a Field.
 *
 * Terms are kept in a map keyed by exponent; zero coefficients are never stored, so the
 * zero polynomial is the empty map. Leading terms depend on the monomial order and are
 * computed on demand.
 */
class Polynomial {
  public:
    using Terms = std::map<IndexPair, Element>;

    explicit Polynomial(const Field& field) : field_(&field) {}

    static Polynomial constant(const Field& field, const Element& c);
    static Polynomial monomial(const Field& field, const IndexPair& exponent, const Element& c);
    /// X1^r1 - 1 and X2^r2 - 1 style binomials: X^exponent - 1.
    static Polynomial binomial_minus_one(const Field& field, const IndexPair& exponent);

    const Field& field() const { return *field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Element coeff(const IndexPair& exponent) const;
    /// Sets a coefficient, erasing the term when c is zero.
    void set(const IndexPair& exponent, const Element& c);
    /// Adds c to the coefficient of X^exponent.
    void add_term(const IndexPair& exponent, const Element& c);

    /// Leading power product exponent (multidegree); throws on the zero polynomial.
    IndexPair leading_power(OrderKind order) const;
    Element leading_coeff(OrderKind order) const;
    /// Divides by the leading coefficient.
    Polynomial monic(OrderKind order) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Element& c) const;
    bool operator==(const Polynomial& o) const { return field_ == o.field_ && terms_ == o.terms_; }

    /// Multiplication by the monomial X^shift (shift must be nonnegative).
    Polynomial shifted(const IndexPair& shift) const;

    Element evaluate(const Element& x1, const Element& x2) const;

    /// `+`-separated terms `c*X1^i*X2^j`, printed in descending order.
    std::string str(OrderKind order = OrderKind::Graded) const;

  private:
    void check_field(const Polynomial& o) const;

    const Field* field_;
    Terms terms_;
};

Polynomial parse_polynomial(const Field& field, std::string_view text);

}  // namespace hbms

#endif  // HYPERBMS_POLYNOMIAL_HPP
