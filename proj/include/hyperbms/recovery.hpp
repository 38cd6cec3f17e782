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

#ifndef HYPERBMS_RECOVERY_HPP
#define HYPERBMS_RECOVERY_HPP

#include <optional>
#include <span>
#include <vector>

#include "hyperbms/table.hpp"

namespace hbms {

/// e with coefficients in the base field and the shift tau'' with e'_m = e_m alpha^{tau''.m}.
struct Descent {
    IndexPair tau;
    Polynomial e;
};

/// Recovered generator e' with u_n = e'(alpha^n) on the working array.
struct SparseGenerator {
    Polynomial e_prime;
    std::optional<Descent> descent;

    std::vector<IndexPair> support() const;
    std::size_t weight() const { return e_prime.size(); }
};

/// Common zeros {m : f(alpha^m) = 0 for all f in F}, row-major.
std::vector<IndexPair> defining_set(std::span<const Polynomial> F, const EvaluationPoint& point);

/// Known cells of a grid, row-major.
std::vector<IndexPair> known_cells(const CellGrid& u);

/**
 * Solves sum_{m in support} c_m alpha^{n.m} = u_n over every n in `cells`.
 * Returns nullopt when the system is singular or inconsistent.
 */
std::optional<Polynomial> solve_coefficients(const Field& field, std::span<const IndexPair> support, const CellGrid& u,
                                             const EvaluationPoint& point, std::span<const IndexPair> cells);

/// First tau'' (row-major) making every c_m alpha^{-tau''.m} a base-field element.
std::optional<Descent> descend_to_base(const Polynomial& e_prime, const EvaluationPoint& point);

/// Every known h_n equals e'(alpha^{n - tau}).
bool verify_afforded(const IncompleteTable& table, const Polynomial& e_prime, const IndexPair& tau,
                     const EvaluationPoint& point);

}  // namespace hbms

#endif  // HYPERBMS_RECOVERY_HPP
