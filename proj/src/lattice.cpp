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

#include "hyperbms/lattice.hpp"

#include <algorithm>

namespace hbms {

std::string to_string(OrderKind order) { return order == OrderKind::Lex ? "lex" : "graded"; }

OrderKind parse_order(const std::string& text) {
    if (text == "lex") return OrderKind::Lex;
    if (text == "graded") return OrderKind::Graded;
    throw ParseError("unknown order '" + text + "'");
}

std::strong_ordering compare_total(const IndexPair& n, const IndexPair& m, OrderKind order) {
    if (order == OrderKind::Lex) {
        if (auto c = n.n1 <=> m.n1; c != 0) return c;
        return n.n2 <=> m.n2;
    }
    // Graded, X2 > X1: within an anti-diagonal the larger n2 is larger, matching the
    // successor chain (l1, l2) -> (l1 - 1, l2 + 1).
    if (auto c = (n.n1 + n.n2) <=> (m.n1 + m.n2); c != 0) return c;
    return n.n2 <=> m.n2;
}

IndexPair successor(const IndexPair& l, OrderKind order, const TableShape& shape) {
    if (order == OrderKind::Graded) {
        if (l.n1 > 0) return {l.n1 - 1, l.n2 + 1};
        return {l.n2 + 1, 0};
    }
    if (l.n2 < shape.r2 - 1) return {l.n1, l.n2 + 1};
    return {l.n1 + 1, 0};
}

std::vector<IndexPair> hyperbolic_set(int delta) {
    std::vector<IndexPair> out;
    for (int l1 = 0; l1 + 1 <= delta; ++l1)
        for (int l2 = 0; (l1 + 1) * (l2 + 1) <= delta; ++l2) {
            const IndexPair p{l1, l2};
            if (p == IndexPair{delta - 1, 0} || p == IndexPair{0, delta - 1}) continue;
            out.push_back(p);
        }
    return out;
}

std::vector<IndexPair> hyperbolic_set(int delta, const TableShape& shape) {
    auto out = hyperbolic_set(delta);
    for (const auto& p : out)
        if (!shape.contains(p))
            throw DoesNotFit("B(" + std::to_string(delta) + ") does not fit in a " + std::to_string(shape.r1) + "x" +
                             std::to_string(shape.r2) + " table");
    return out;
}

std::vector<IndexPair> border_set(int t) {
    if (t < 2 || t > 4) throw UnsupportedRegime("border set is defined for 2 <= t <= 4, got t = " + std::to_string(t));
    std::vector<IndexPair> out;
    for (const auto& p : hyperbolic_set(2 * t + 1))
        if (2 * t <= (p.n1 + 1) * (p.n2 + 1)) out.push_back(p);
    return out;
}

std::vector<IndexPair> sorted_iteration(std::vector<IndexPair> points, OrderKind order) {
    std::sort(points.begin(), points.end(), [order](const IndexPair& a, const IndexPair& b) {
        return less_total(a, b, order);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::vector<IndexPair> full_iteration(const TableShape& shape, OrderKind order) {
    std::vector<IndexPair> all;
    all.reserve(static_cast<std::size_t>(shape.size()));
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j) all.push_back({i, j});
    return sorted_iteration(std::move(all), order);
}

std::vector<IndexPair> box(const IndexPair& corner) {
    std::vector<IndexPair> out;
    for (int i = 0; i <= corner.n1; ++i)
        for (int j = 0; j <= corner.n2; ++j) out.push_back({i, j});
    return out;
}

}  // namespace hbms
