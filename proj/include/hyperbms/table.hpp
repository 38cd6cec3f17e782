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

#ifndef HYPERBMS_TABLE_HPP
#define HYPERBMS_TABLE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperbms/grid.hpp"
#include "hyperbms/polynomial.hpp"

namespace hbms {

/// Pair (alpha1, alpha2) of primitive r1-th and r2-th roots of unity.
class EvaluationPoint {
  public:
    EvaluationPoint() = default;

    /// alpha_i = a^{e_i}; throws FieldError unless a^{e_i} has order exactly r_i.
    static EvaluationPoint from_exponents(const Field& field, std::int64_t e1, std::int64_t e2, TableShape shape);
    /// alpha_i = root_of_unity(r_i).
    static EvaluationPoint standard(const Field& field, TableShape shape);

    const Element& alpha1() const { return alpha1_; }
    const Element& alpha2() const { return alpha2_; }
    std::int64_t exponent1() const { return e1_; }
    std::int64_t exponent2() const { return e2_; }
    const TableShape& shape() const { return shape_; }

    /// alpha^n = (alpha1^n1, alpha2^n2), n taken modulo the shape.
    std::pair<Element, Element> power(const IndexPair& n) const;
    /// alpha^{n.m} = alpha1^{n1 m1} alpha2^{n2 m2}.
    Element monomial(const IndexPair& n, const IndexPair& m) const;
    /// f(alpha^n).
    Element evaluate(const Polynomial& f, const IndexPair& n) const;

  private:
    Element alpha1_, alpha2_;
    std::int64_t e1_ = 0, e2_ = 0;
    TableShape shape_;
};

/// An r1 x r2 table H of known values and holes over a field.
struct IncompleteTable {
    std::shared_ptr<const Field> field;
    CellGrid cells;
    EvaluationPoint point;
    /// Whether the alpha exponents were given explicitly (printed back by format_table).
    bool explicit_alpha = false;

    const TableShape& shape() const { return cells.shape(); }
    std::size_t hole_count() const { return static_cast<std::size_t>(shape().size()) - cells.known_count(); }
};

/// U with u_n = h_{tau+n}, indexes mod the shape.
struct WorkingArray {
    CellGrid cells;
    IndexPair tau;

    const TableShape& shape() const { return cells.shape(); }
};

struct Placement {
    IndexPair tau;
    int t = 0;
    bool operator==(const Placement&) const = default;
};

/// Candidates (tau, t) achieving the largest t, sorted by tau row-major.
struct DetectionResult {
    std::vector<Placement> candidates;
    int max_t() const { return candidates.empty() ? 0 : candidates.front().t; }
};

/// Header values replaced at load time (from the command line).
struct TableOverrides {
    std::optional<std::string> modulus;
    std::optional<std::int64_t> alpha1_exp;
    std::optional<std::int64_t> alpha2_exp;
};

IncompleteTable parse_table(std::string_view text, const TableOverrides& overrides = {});
std::string format_table(const IncompleteTable& table);

/// Largest t with tau + B(2t+1) fully known and B(2t+1) inside the table, 0 when none.
int max_hyperbolic_t(const IncompleteTable& table, const IndexPair& tau);
DetectionResult detect_hyperbolic(const IncompleteTable& table);

WorkingArray extract_working(const IncompleteTable& table, const IndexPair& tau);

/// Fills every hole h_n with e'(alpha^{n - tau}); known cells are left as they are.
IncompleteTable complete_table(const IncompleteTable& table, const Polynomial& e_prime, const IndexPair& tau,
                               const EvaluationPoint& point);

}  // namespace hbms

#endif  // HYPERBMS_TABLE_HPP
