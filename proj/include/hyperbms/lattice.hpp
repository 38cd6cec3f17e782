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

#ifndef HYPERBMS_LATTICE_HPP
#define HYPERBMS_LATTICE_HPP

#include <compare>
#include <ostream>
#include <string>
#include <vector>

#include "hyperbms/error.hpp"

namespace hbms {

/// Exponent / index pair. Coordinates may go negative only as intermediate differences.
struct IndexPair {
    int n1 = 0;
    int n2 = 0;

    /// Row-major ordering, used only for containers and deterministic output.
    auto operator<=>(const IndexPair&) const = default;

    IndexPair operator+(const IndexPair& o) const { return {n1 + o.n1, n2 + o.n2}; }
    IndexPair operator-(const IndexPair& o) const { return {n1 - o.n1, n2 - o.n2}; }
    bool nonnegative() const { return n1 >= 0 && n2 >= 0; }
    std::string str() const { return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const IndexPair& p) { return os << p.str(); }

struct TableShape {
    int r1 = 1;
    int r2 = 1;

    bool operator==(const TableShape&) const = default;
    int size() const { return r1 * r2; }
    bool contains(const IndexPair& n) const { return n.n1 >= 0 && n.n2 >= 0 && n.n1 < r1 && n.n2 < r2; }
    /// Canonical representative of n in Z_r1 x Z_r2.
    IndexPair wrap(const IndexPair& n) const {
        return {((n.n1 % r1) + r1) % r1, ((n.n2 % r2) + r2) % r2};
    }
};

/// Lex is lexicographic with X1 > X2; Graded is the graded order with X2 > X1.
enum class OrderKind { Lex, Graded };

std::string to_string(OrderKind order);
OrderKind parse_order(const std::string& text);

/// Componentwise partial order n <= m.
inline bool precedes(const IndexPair& n, const IndexPair& m) { return n.n1 <= m.n1 && n.n2 <= m.n2; }

/// Membership in Sigma_s = { n : s <= n }.
inline bool in_sigma(const IndexPair& s, const IndexPair& n) { return precedes(s, n); }

std::strong_ordering compare_total(const IndexPair& n, const IndexPair& m, OrderKind order);

inline bool less_total(const IndexPair& n, const IndexPair& m, OrderKind order) {
    return compare_total(n, m, order) == std::strong_ordering::less;
}

/// Iteration successor: graded walks anti-diagonals, lex wraps the second coordinate at r2.
IndexPair successor(const IndexPair& l, OrderKind order, const TableShape& shape);

/// B(delta) = {(l1,l2) : (l1+1)(l2+1) <= delta} minus {(delta-1,0), (0,delta-1)}, row-major.
/// Throws DoesNotFit when a point falls outside the table.
std::vector<IndexPair> hyperbolic_set(int delta, const TableShape& shape);

/// Same set without a table bound.
std::vector<IndexPair> hyperbolic_set(int delta);

/// Border indexes of B(2t+1): those with 2t <= (l1+1)(l2+1). Defined for 2 <= t <= 4.
std::vector<IndexPair> border_set(int t);

/// The points sorted ascending under the total order.
std::vector<IndexPair> sorted_iteration(std::vector<IndexPair> points, OrderKind order);

/// All of Z_r1 x Z_r2 in iteration order.
std::vector<IndexPair> full_iteration(const TableShape& shape, OrderKind order);

/// Lower set {n : n <= corner}, empty when the corner has a negative coordinate.
std::vector<IndexPair> box(const IndexPair& corner);

}  // namespace hbms

#endif  // HYPERBMS_LATTICE_HPP
