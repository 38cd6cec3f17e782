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

#ifndef HYPERBMS_ORACLE_HPP
#define HYPERBMS_ORACLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hyperbms/inference.hpp"
#include "hyperbms/table.hpp"

namespace hbms {

/// Full table u_n = e(alpha^{tau+n}) by direct evaluation.
CellGrid syndrome_table(const Polynomial& e, const IndexPair& tau, const EvaluationPoint& point);

/// e' with e'(alpha^n) = e(alpha^{offset+n}): coefficients scaled by alpha^{offset.m}.
Polynomial shift_generator(const Polynomial& e, const IndexPair& offset, const EvaluationPoint& point);

struct OracleInstance {
    std::shared_ptr<const Field> field;
    Polynomial e;
    IndexPair tau;
    EvaluationPoint point;
    CellGrid full;
    IncompleteTable table;
    /// Window tau' + B(2t+1) the hole mask was built around.
    IndexPair window;
    int t = 0;

    const TableShape& shape() const { return full.shape(); }
    /// Expected recovered generator for the working array at offset tau'.
    Polynomial e_prime(const IndexPair& window_tau) const { return shift_generator(e, tau + window_tau, point); }
};

struct InstanceOptions {
    int t = 2;
    /// Support size; uniform in 1..t when unset.
    std::optional<int> weight;
    /// Coefficients from the base field F (otherwise from all of L).
    bool base_field = true;
    /// Holes placed at random outside the window.
    std::size_t holes = 0;
    /// Holes at window + n for each listed n (inside the window).
    std::vector<IndexPair> puncture;
};

OracleInstance random_instance(std::shared_ptr<const Field> field, TableShape shape, std::uint64_t seed,
                               const InstanceOptions& opts);

/// Table around a given generator, with the same hole options.
OracleInstance make_instance(std::shared_ptr<const Field> field, TableShape shape, Polynomial e, IndexPair tau,
                             IndexPair window, std::uint64_t seed, const InstanceOptions& opts);

struct SweepSummary {
    std::size_t instances = 0;
    std::size_t completed = 0;
    std::size_t support_ok = 0;
    std::size_t table_ok = 0;
    /// Final |Delta| = weight and |D| = |Delta|.
    std::size_t footprint_ok = 0;
    std::size_t rejected = 0;

    bool all_recovered() const { return completed == instances && support_ok == instances && table_ok == instances; }
};

/// Checks one instance against the pipeline and accumulates into the summary.
void check_instance(const OracleInstance& inst, const ResolveConfig& config, SweepSummary& summary);

/**
 * Every support of the given weight, every coefficient tuple from `coefficients` and
 * every offset tau on a fully known table, run through resolve with the given t.
 */
SweepSummary exhaustive_sweep(std::shared_ptr<const Field> field, TableShape shape, int weight,
                              const std::vector<Element>& coefficients, int t);

}  // namespace hbms

#endif  // HYPERBMS_ORACLE_HPP
