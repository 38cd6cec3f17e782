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

#include "hyperbms/recovery.hpp"

#include <algorithm>

namespace hbms {

std::vector<IndexPair> SparseGenerator::support() const {
    std::vector<IndexPair> out;
    for (const auto& [m, c] : e_prime.terms()) out.push_back(m);
    return out;
}

std::vector<IndexPair> defining_set(std::span<const Polynomial> F, const EvaluationPoint& point) {
    std::vector<IndexPair> out;
    const auto& shape = point.shape();
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j) {
            const IndexPair m{i, j};
            if (std::all_of(F.begin(), F.end(), [&](const Polynomial& f) { return point.evaluate(f, m).is_zero(); }))
                out.push_back(m);
        }
    return out;
}

std::vector<IndexPair> known_cells(const CellGrid& u) {
    std::vector<IndexPair> out;
    for (int i = 0; i < u.shape().r1; ++i)
        for (int j = 0; j < u.shape().r2; ++j)
            if (u.known({i, j})) out.push_back({i, j});
    return out;
}

std::optional<Polynomial> solve_coefficients(const Field& field, std::span<const IndexPair> support, const CellGrid& u,
                                             const EvaluationPoint& point, std::span<const IndexPair> cells) {
    const std::size_t k = support.size();
    std::vector<std::vector<Element>> rows;
    rows.reserve(cells.size());
    for (const auto& n : cells) {
        const auto& v = u.at(n);
        if (!v) throw Error("solve_coefficients given an unknown cell " + n.str());
        std::vector<Element> row;
        row.reserve(k + 1);
        for (const auto& m : support) row.push_back(point.monomial(n, m));
        row.push_back(*v);
        rows.push_back(std::move(row));
    }

    std::size_t rank = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) return std::nullopt;
        std::swap(rows[rank], rows[piv]);
        const Element inv = rows[rank][col].inv();
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const Element factor = rows[r][col];
            for (std::size_t c = col; c <= k; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][k].is_zero()) return std::nullopt;

    Polynomial e(field);
    for (std::size_t i = 0; i < k; ++i) e.set(support[i], rows[i][k]);
    if (e.size() != k) return std::nullopt;
    return e;
}

std::optional<Descent> descend_to_base(const Polynomial& e_prime, const EvaluationPoint& point) {
    const auto& field = e_prime.field();
    const auto& shape = point.shape();
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j) {
            const IndexPair tau{i, j};
            Polynomial e(field);
            bool ok = true;
            for (const auto& [m, c] : e_prime.terms()) {
                const Element b = c / point.monomial(tau, m);
                if (!field.in_base_field(b)) {
                    ok = false;
                    break;
                }
                e.set(m, b);
            }
            if (ok) return Descent{tau, e};
        }
    return std::nullopt;
}

bool verify_afforded(const IncompleteTable& table, const Polynomial& e_prime, const IndexPair& tau,
                     const EvaluationPoint& point) {
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) {
            const IndexPair n{i, j};
            const auto& h = table.cells.at(n);
            if (h && point.evaluate(e_prime, n - tau) != *h) return false;
        }
    return true;
}

}  // namespace hbms
