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

#ifndef HYPERBMS_INFERENCE_HPP
#define HYPERBMS_INFERENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperbms/bms.hpp"
#include "hyperbms/recovery.hpp"
#include "hyperbms/report.hpp"
#include "hyperbms/table.hpp"

namespace hbms {

enum class HoleKind { Direct, Interior, Axis, OffBorder };

struct HoleClassification {
    HoleKind kind = HoleKind::OffBorder;
    /// 1..6 for Interior, 1..2 for Axis.
    int case_id = 0;
    /// Direct: indexes into F of every f with LP(f) <= l.
    std::vector<std::size_t> witnesses;

    bool exceptional() const { return kind == HoleKind::Interior || kind == HoleKind::Axis; }
    std::string str() const;
    bool operator==(const HoleClassification&) const = default;
};

/// One term h = f^(i) - (p / v_j) X^shift g^(j) of an exceptional construction (0-based i, j).
struct BranchTerm {
    std::size_t f_index;
    std::size_t g_index;
};

/// The (f, g) pairs of an exceptional case; two entries for interior cases 5 and 6.
std::vector<BranchTerm> branch_terms(const HoleClassification& cls);

HoleClassification classify_hole(const IndexPair& l, const BmsState& state, OrderKind order, int t);

/// u_l solving f[U]_l = 0, or nullopt (with `missing`) when another needed cell is unknown.
std::optional<Element> infer_direct(const Polynomial& f, const CellGrid& u, const IndexPair& l, OrderKind order,
                                    IndexPair* missing = nullptr);

/// h_b (and h_c) for an exceptional hole at l.
std::vector<Polynomial> construct_branch_polys(const HoleClassification& cls, const BmsState& state,
                                               const IndexPair& l, OrderKind order, const Element& b,
                                               const std::optional<Element>& c = std::nullopt);

/// A hole value chosen at iteration point l (working-array coordinates).
struct Fill {
    IndexPair cell;
    Element value;
    HoleClassification how;
};

enum class LeafKind { Verified, NotAfforded, DefiningSetMismatch, Unsolvable, NotClosed, Overflow, Unsupported };

std::string to_string(LeafKind kind);

/// End of one path through the branch tree.
struct Leaf {
    LeafKind kind = LeafKind::Unsupported;
    std::string detail;
    std::vector<Fill> fills;
    BmsState state;
    CellGrid u;
    std::optional<Polynomial> e_prime;
};

/// Everything the branch explorer needs about one placement.
struct SearchContext {
    const IncompleteTable* table = nullptr;
    IndexPair tau;
    int t = 0;
    OrderKind order = OrderKind::Graded;
    std::vector<IndexPair> points;
    /// Known cells of the extracted working array before any hole filling.
    std::vector<IndexPair> original_known;
    std::size_t budget = 0;
    bool check_invariants = true;
    /// Leaves produced so far; exploring past the budget throws BudgetExceeded.
    std::size_t leaves = 0;
};

class BudgetExceeded : public Error {
  public:
    using Error::Error;
};

SearchContext make_context(const IncompleteTable& table, const IndexPair& tau, int t, OrderKind order,
                           std::size_t budget);

/// Runs from (state, u, index) to the end of the window, branching at every hole.
std::vector<Leaf> explore(SearchContext& ctx, BmsState state, CellGrid u, std::size_t index, std::vector<Fill> fills);

/// A parameter choice at an exceptional hole together with the leaves it leads to.
struct CandidateBranch {
    HoleClassification cls;
    IndexPair l;
    Element b;
    std::optional<Element> c;
    std::vector<Polynomial> h;
    Element hole_value;
    /// State right after re-running the step at l.
    BmsState state_after;
    std::vector<Leaf> leaves;

    bool verified() const;
};

/// Every b (or consistent (b, c)) for the exceptional hole the run stopped at.
std::vector<CandidateBranch> enumerate_branches(SearchContext& ctx, const BmsOutcome& at_hole, const CellGrid& u,
                                                const HoleClassification& cls);

enum class OrderMode { Lex, Graded, Auto };

std::string to_string(OrderMode mode);
OrderMode parse_order_mode(const std::string& text);

struct ResolveConfig {
    OrderMode order = OrderMode::Auto;
    std::optional<IndexPair> tau;
    std::optional<int> t;
    /// Leaves per attempt; 0 means |L|^2.
    std::size_t branch_budget = 0;
    bool check_invariants = true;
    /// Also try windows whose holes all sit on border indexes.
    bool punctured = true;
};

struct ResolveResult {
    CompletionReport report;
    std::optional<IncompleteTable> completed;
    std::optional<SparseGenerator> generator;
    BmsState state;
};

/// Orders to try for a window, most promising first.
std::vector<OrderKind> auto_orders(const CellGrid& u, int t);

/// Detected windows first, then punctured windows whose holes are all border indexes.
std::vector<Placement> candidate_placements(const IncompleteTable& table, bool punctured);

ResolveResult resolve(const IncompleteTable& table, const ResolveConfig& config = {});

}  // namespace hbms

#endif  // HYPERBMS_INFERENCE_HPP
