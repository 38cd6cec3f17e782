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

#include "hyperbms/recurrence.hpp"

namespace hbms {

std::optional<Element> try_recurrence_value(const Polynomial& f, const CellGrid& u, const IndexPair& n,
                                            OrderKind order, IndexPair* missing) {
    if (f.is_zero()) return f.field().zero();
    const IndexPair s = f.leading_power(order);
    if (!in_sigma(s, n)) return f.field().zero();
    Element sum = f.field().zero();
    for (const auto& [m, c] : f.terms()) {
        const IndexPair at = m + n - s;
        const auto& v = u.at(at);
        if (!v) {
            if (missing) *missing = u.shape().wrap(at);
            return std::nullopt;
        }
        sum += c * *v;
    }
    return sum;
}

Element recurrence_value(const Polynomial& f, const CellGrid& u, const IndexPair& n, OrderKind order) {
    IndexPair missing;
    auto v = try_recurrence_value(f, u, n, order, &missing);
    if (!v) throw NeededCellUnknown(missing);
    return *v;
}

bool generates_prefix(const Polynomial& f, const CellGrid& u, const IndexPair& l, OrderKind order) {
    const IndexPair s = f.leading_power(order);
    const auto& shape = u.shape();
    for (int i = s.n1; i < shape.r1; ++i)
        for (int j = s.n2; j < shape.r2; ++j) {
            const IndexPair k{i, j};
            if (!less_total(k, l, order)) continue;
            if (!recurrence_value(f, u, k, order).is_zero()) return false;
        }
    return true;
}

bool generates_on(const Polynomial& f, const CellGrid& u, std::span<const IndexPair> points, OrderKind order) {
    for (const auto& k : points)
        if (!recurrence_value(f, u, k, order).is_zero()) return false;
    return true;
}

}  // namespace hbms
