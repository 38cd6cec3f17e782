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

#ifndef HYPERBMS_BMS_HPP
#define HYPERBMS_BMS_HPP

#include <set>
#include <span>
#include <vector>

#include "hyperbms/grid.hpp"
#include "hyperbms/polynomial.hpp"

namespace hbms {

using Footprint = std::set<IndexPair>;

/// Auxiliary entry: g generates u^k and g[U]_k = v != 0.
struct AuxEntry {
    Polynomial g;
    IndexPair k;
    Element v;

    /// k - LP(g).
    IndexPair span(OrderKind order) const { return k - g.leading_power(order); }
    bool operator==(const AuxEntry&) const = default;
};

/**
 * @brief State of the iteration after some prefix u^l.
 *
 * F is kept sorted by the first coordinate of the defining points, descending, so
 * F[0] has defining point (s1, 0) and F.back() has (0, s2). G[i] belongs to the corner
 * (s^(i)_1 - 1, s^(i+1)_2 - 1) of the footprint and has exactly that span.
 */
struct BmsState {
    std::vector<Polynomial> F;
    std::vector<AuxEntry> G;
    /// Discrepancies taken as zero because a failure would have overflowed the footprint.
    std::size_t assumed_zero = 0;

    std::size_t d() const { return F.size(); }
    std::vector<IndexPair> defining_points(OrderKind order) const;
    Footprint footprint(OrderKind order) const;
    bool operator==(const BmsState&) const = default;
};

BmsState init_state(const Field& field);

/// Footprint of a staircase given by its defining points (s1 descending).
Footprint footprint_of(std::span<const IndexPair> defining_points);
/// Minimal points of Sigma_0 minus a lower set, s1 descending.
std::vector<IndexPair> defining_points_of(const Footprint& delta);
/// Corners (s^(i)_1 - 1, s^(i+1)_2 - 1) of the staircase.
std::vector<IndexPair> corners_of(std::span<const IndexPair> defining_points);

enum class StepStatus { Ok, FootprintOverflow, HoleEncountered };

struct StepResult {
    StepStatus status = StepStatus::Ok;
    /// Iteration point of the step.
    IndexPair at;
    /// Missing cell for HoleEncountered; equals `at` when u_l itself is unknown.
    IndexPair cell;
    /// |Delta| after the step, or the size that would have been reached on overflow.
    std::size_t footprint_size = 0;
    bool updated = false;
};

struct StepOptions {
    /// Bound on |Delta|; 0 disables the overflow check.
    int t = 0;
    /// Re-check staircase, auxiliary and discrepancy invariants after every update.
    bool check_invariants = true;
};

/// One iteration at l. On Ok the state describes u^{l+1}; otherwise it is left unchanged.
StepResult step(BmsState& state, const IndexPair& l, const CellGrid& u, OrderKind order, const StepOptions& opts = {});

enum class OutcomeKind { Basis, FootprintOverflow, HoleEncountered, NotClosed };

std::string to_string(OutcomeKind kind);

struct BmsOutcome {
    OutcomeKind kind = OutcomeKind::Basis;
    BmsState state;
    /// Index into the point list where the run stopped (size() when it finished).
    std::size_t index = 0;
    IndexPair at;
    IndexPair cell;
    std::size_t footprint_size = 0;
};

struct RunOptions {
    int t = 0;
    bool check_invariants = true;
    /// Apply closure_check at the end and report NotClosed on failure.
    bool closure = false;
};

/// Steps over points[begin..] starting from `state`.
BmsOutcome run_points(BmsState state, std::span<const IndexPair> points, std::size_t begin, const CellGrid& u,
                      OrderKind order, const TableShape& shape, const RunOptions& opts);

/// Iterates sorted_iteration(B(2t+1)). Throws DoesNotFit when the window leaves the table.
BmsOutcome run(const Field& field, const CellGrid& u, int t, OrderKind order, bool closure = false);

/// Iterates every index of the table in order (the unrestricted run).
BmsOutcome run_full(const Field& field, const CellGrid& u, int t, OrderKind order);

/// Buchberger criterion on F together with X1^r1 - 1 and X2^r2 - 1.
bool closure_check(std::span<const Polynomial> F, const TableShape& shape, OrderKind order);

/**
 * Exhaustive minimality check for small fields: no polynomial with leading power in
 * Delta and support inside box(max_degree) generates u^l. Cost |L|^(terms) per point.
 */
bool minimality_audit(const Footprint& delta, const CellGrid& u, const IndexPair& l, OrderKind order,
                      std::span<const IndexPair> prefix_points, int max_degree);

}  // namespace hbms

#endif  // HYPERBMS_BMS_HPP
