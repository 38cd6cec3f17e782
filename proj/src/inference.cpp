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

#include "hyperbms/inference.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyperbms/recurrence.hpp"

namespace hbms {

std::string HoleClassification::str() const {
    switch (kind) {
        case HoleKind::Direct: return "direct";
        case HoleKind::Interior: return "interior case " + std::to_string(case_id);
        case HoleKind::Axis: return "axis case " + std::to_string(case_id);
        case HoleKind::OffBorder: return "off border";
    }
    return "?";
}

std::vector<BranchTerm> branch_terms(const HoleClassification& cls) {
    if (cls.kind == HoleKind::Axis) return {cls.case_id == 1 ? BranchTerm{1, 0} : BranchTerm{0, 0}};
    if (cls.kind != HoleKind::Interior) throw Error("branch terms requested for a non-exceptional hole");
    switch (cls.case_id) {
        case 1: return {{1, 0}};
        case 2: return {{0, 0}};
        case 3: return {{1, 0}};
        case 4: return {{0, 0}};
        case 5: return {{1, 1}, {2, 0}};
        case 6: return {{0, 1}, {1, 0}};
    }
    throw Error("unknown interior case " + std::to_string(cls.case_id));
}

HoleClassification classify_hole(const IndexPair& l, const BmsState& state, OrderKind order, int t) {
    const auto border = border_set(t);
    HoleClassification cls;
    if (std::find(border.begin(), border.end(), l) == border.end()) return cls;

    const auto pts = state.defining_points(order);
    const std::size_t d = pts.size();
    auto s = [&](std::size_t i) { return pts[i - 1]; };
    auto interior = [&](int k) { return HoleClassification{HoleKind::Interior, k, {}}; };

    if (l.n1 != 0 && l.n2 != 0) {
        if (order == OrderKind::Graded && d == 2 && s(1).n1 == t && s(2).n2 == 1 && l.n2 == 1) return interior(1);
        if (order == OrderKind::Lex && d == 2 && s(1).n1 == 1 && l.n1 == 1 && s(2).n2 == t) return interior(2);
        if (d == 2 && s(1) == IndexPair{2, 0} && s(2) == IndexPair{0, 2}) {
            if (l == IndexPair{1, 3}) return interior(3);
            if (l == IndexPair{3, 1}) return interior(4);
        }
        if (d == 3 && s(1) == IndexPair{2, 0} && s(3) == IndexPair{0, t - 1} && l == IndexPair{1, t - 1})
            return interior(5);
        if (d == 3 && s(1) == IndexPair{t - 1, 0} && s(3) == IndexPair{0, 2} && l == IndexPair{t - 1, 1})
            return interior(6);
    } else {
        if (l == IndexPair{0, 2 * t - 1} && d == 2 && s(2).n2 == t) return {HoleKind::Axis, 1, {}};
        if (l == IndexPair{2 * t - 1, 0} && d == 2 && s(1).n1 == t) return {HoleKind::Axis, 2, {}};
    }

    cls.kind = HoleKind::Direct;
    for (std::size_t i = 0; i < d; ++i)
        if (precedes(pts[i], l)) cls.witnesses.push_back(i);
    return cls;
}

std::optional<Element> infer_direct(const Polynomial& f, const CellGrid& u, const IndexPair& l, OrderKind order,
                                    IndexPair* missing) {
    const IndexPair s = f.leading_power(order);
    if (!precedes(s, l)) throw Error("infer_direct: LP(f) = " + s.str() + " does not divide " + l.str());
    Element sum = f.field().zero();
    for (const auto& [m, c] : f.terms()) {
        if (m == s) continue;
        const auto& v = u.at(m + l - s);
        if (!v) {
            if (missing) *missing = u.shape().wrap(m + l - s);
            return std::nullopt;
        }
        sum += c * *v;
    }
    return -sum / f.coeff(s);
}

std::vector<Polynomial> construct_branch_polys(const HoleClassification& cls, const BmsState& state,
                                               const IndexPair& l, OrderKind order, const Element& b,
                                               const std::optional<Element>& c) {
    const auto terms = branch_terms(cls);
    if (terms.size() == 2 && !c) throw Error(cls.str() + " needs two parameters");
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto [i, j] = terms[k];
        if (i >= state.F.size() || j >= state.G.size())
            throw std::logic_error(cls.str() + ": referenced f or g does not exist");
        const auto& f = state.F[i];
        const auto& g = state.G[j];
        const IndexPair shift = f.leading_power(order) - l + g.span(order);
        if (!shift.nonnegative()) throw std::logic_error(cls.str() + ": g cannot be aligned at " + l.str());
        const Element& p = k == 0 ? b : *c;
        out.push_back(f - g.g.shifted(shift) * (p / g.v));
    }
    return out;
}

std::string to_string(LeafKind kind) {
    switch (kind) {
        case LeafKind::Verified: return "verified";
        case LeafKind::NotAfforded: return "not-afforded";
        case LeafKind::DefiningSetMismatch: return "defining-set-mismatch";
        case LeafKind::Unsolvable: return "unsolvable";
        case LeafKind::NotClosed: return "not-closed";
        case LeafKind::Overflow: return "footprint-overflow";
        case LeafKind::Unsupported: return "unsupported-hole";
    }
    return "?";
}

bool CandidateBranch::verified() const {
    return std::any_of(leaves.begin(), leaves.end(), [](const Leaf& x) { return x.kind == LeafKind::Verified; });
}

SearchContext make_context(const IncompleteTable& table, const IndexPair& tau, int t, OrderKind order,
                           std::size_t budget) {
    SearchContext ctx;
    ctx.table = &table;
    ctx.tau = table.shape().wrap(tau);
    ctx.t = t;
    ctx.order = order;
    ctx.points = sorted_iteration(hyperbolic_set(2 * t + 1, table.shape()), order);
    ctx.original_known = known_cells(extract_working(table, tau).cells);
    ctx.budget = budget;
    return ctx;
}

namespace {

Leaf make_leaf(SearchContext& ctx, LeafKind kind, std::string detail, const BmsState& state, const CellGrid& u,
               const std::vector<Fill>& fills) {
    if (++ctx.leaves > ctx.budget)
        throw BudgetExceeded("more than " + std::to_string(ctx.budget) + " branch leaves");
    return Leaf{kind, std::move(detail), fills, state, u, std::nullopt};
}

Leaf finish_leaf(SearchContext& ctx, const BmsState& state, const CellGrid& u, const std::vector<Fill>& fills) {
    const auto& table = *ctx.table;
    const auto& point = table.point;
    Leaf leaf = make_leaf(ctx, LeafKind::Verified, "", state, u, fills);
    const auto D = defining_set(state.F, point);
    const auto delta = state.footprint(ctx.order);
    if (D.size() != delta.size()) {
        leaf.kind = LeafKind::DefiningSetMismatch;
        leaf.detail = "|D| = " + std::to_string(D.size()) + ", |Delta| = " + std::to_string(delta.size());
        return leaf;
    }
    auto e = solve_coefficients(*table.field, D, u, point, ctx.original_known);
    if (!e) {
        leaf.kind = LeafKind::Unsolvable;
        return leaf;
    }
    leaf.e_prime = e;
    for (const auto& fill : fills)
        if (point.evaluate(*e, fill.cell) != fill.value) {
            leaf.kind = LeafKind::NotAfforded;
            leaf.detail = "inferred value at " + fill.cell.str() + " not reproduced";
            return leaf;
        }
    if (!verify_afforded(table, *e, ctx.tau, point)) leaf.kind = LeafKind::NotAfforded;
    return leaf;
}

}  // namespace

std::vector<Leaf> explore(SearchContext& ctx, BmsState state, CellGrid u, std::size_t index, std::vector<Fill> fills) {
    const RunOptions opts{ctx.t, ctx.check_invariants, true};
    auto out = run_points(std::move(state), ctx.points, index, u, ctx.order, u.shape(), opts);
    std::vector<Leaf> leaves;
    switch (out.kind) {
        case OutcomeKind::Basis:
            leaves.push_back(finish_leaf(ctx, out.state, u, fills));
            return leaves;
        case OutcomeKind::NotClosed:
            leaves.push_back(make_leaf(ctx, LeafKind::NotClosed, "", out.state, u, fills));
            return leaves;
        case OutcomeKind::FootprintOverflow:
            leaves.push_back(make_leaf(ctx, LeafKind::Overflow,
                                       "|Delta| = " + std::to_string(out.footprint_size) + " at " + out.at.str(),
                                       out.state, u, fills));
            return leaves;
        case OutcomeKind::HoleEncountered: break;
    }

    const IndexPair l = out.at;
    auto unsupported = [&](const std::string& why) {
        leaves.push_back(make_leaf(ctx, LeafKind::Unsupported, why, out.state, u, fills));
        return leaves;
    };
    if (out.cell != l) return unsupported("step " + l.str() + " needs unknown cell " + out.cell.str());

    HoleClassification cls;
    try {
        cls = classify_hole(l, out.state, ctx.order, ctx.t);
    } catch (const UnsupportedRegime&) {
        return unsupported("hole " + l.str() + " with t = " + std::to_string(ctx.t));
    }
    if (cls.kind == HoleKind::OffBorder) return unsupported("hole " + l.str() + " is not a border index");

    if (cls.kind == HoleKind::Direct) {
        std::vector<Element> values;
        for (auto w : cls.witnesses) {
            auto v = infer_direct(out.state.F[w], u, l, ctx.order);
            if (v && std::find(values.begin(), values.end(), *v) == values.end()) values.push_back(*v);
        }
        if (values.empty()) return unsupported("no witness determines hole " + l.str());
        for (const auto& v : values) {
            CellGrid filled = u;
            filled.set(l, v);
            auto next_fills = fills;
            next_fills.push_back({l, v, cls});
            auto sub = explore(ctx, out.state, std::move(filled), out.index, std::move(next_fills));
            std::move(sub.begin(), sub.end(), std::back_inserter(leaves));
        }
        return leaves;
    }

    auto branches = enumerate_branches(ctx, out, u, cls);
    if (branches.empty()) return unsupported(cls.str() + " at " + l.str() + " reads unknown cells");
    for (auto& br : branches) std::move(br.leaves.begin(), br.leaves.end(), std::back_inserter(leaves));
    return leaves;
}

std::vector<CandidateBranch> enumerate_branches(SearchContext& ctx, const BmsOutcome& at_hole, const CellGrid& u,
                                                const HoleClassification& cls) {
    const IndexPair l = at_hole.at;
    const auto& state = at_hole.state;
    const auto terms = branch_terms(cls);
    const auto elems = ctx.table->field->elements();
    std::vector<CandidateBranch> out;

    auto spawn = [&](const Element& b, const std::optional<Element>& c, std::vector<Polynomial> h,
                     const Element& value) {
        CandidateBranch br{cls, l, b, c, h, value, state, {}};
        for (std::size_t k = 0; k < terms.size(); ++k) br.state_after.F[terms[k].f_index] = h[k];
        CellGrid filled = u;
        filled.set(l, value);
        auto fills = std::vector<Fill>{};
        fills.push_back({l, value, cls});
        const auto r = step(br.state_after, l, filled, ctx.order, {ctx.t, ctx.check_invariants});
        if (r.status == StepStatus::FootprintOverflow) {
            br.leaves.push_back(make_leaf(ctx, LeafKind::Overflow, "|Delta| = " + std::to_string(r.footprint_size),
                                          br.state_after, filled, fills));
        } else if (r.status == StepStatus::HoleEncountered) {
            br.leaves.push_back(make_leaf(ctx, LeafKind::Unsupported, "needs unknown cell " + r.cell.str(),
                                          br.state_after, filled, fills));
        } else {
            br.leaves = explore(ctx, br.state_after, filled, at_hole.index + 1, fills);
        }
        out.push_back(std::move(br));
    };

    for (const auto& b : elems) {
        if (terms.size() == 1) {
            auto h = construct_branch_polys(cls, state, l, ctx.order, b);
            auto v = infer_direct(h[0], u, l, ctx.order);
            if (!v) return {};
            spawn(b, std::nullopt, std::move(h), *v);
            continue;
        }
        for (const auto& c : elems) {
            auto h = construct_branch_polys(cls, state, l, ctx.order, b, c);
            auto vb = infer_direct(h[0], u, l, ctx.order);
            auto vc = infer_direct(h[1], u, l, ctx.order);
            if (!vb || !vc) return {};
            if (*vb != *vc) continue;
            spawn(b, c, std::move(h), *vb);
        }
    }
    return out;
}

std::string to_string(OrderMode mode) {
    switch (mode) {
        case OrderMode::Lex: return "lex";
        case OrderMode::Graded: return "graded";
        case OrderMode::Auto: return "auto";
    }
    return "?";
}

OrderMode parse_order_mode(const std::string& text) {
    if (text == "auto") return OrderMode::Auto;
    return parse_order(text) == OrderKind::Lex ? OrderMode::Lex : OrderMode::Graded;
}

std::vector<OrderKind> auto_orders(const CellGrid& u, int t) {
    auto nonzero = [&](const IndexPair& n) {
        const auto& v = u.at(n);
        return v && !v->is_zero();
    };
    bool lex = false, graded = false;
    for (int j = 0; j < t; ++j) lex = lex || nonzero({0, j});
    for (int i = 0; i <= t; ++i) graded = graded || nonzero({i, t - i});
    if (graded && !lex) return {OrderKind::Graded, OrderKind::Lex};
    return {OrderKind::Lex, OrderKind::Graded};
}

namespace {

/// Holes of tau + B(2t+1), or nullopt when the window does not fit or has a hole off the border.
std::optional<std::size_t> window_holes(const IncompleteTable& table, const IndexPair& tau, int t) {
    std::vector<IndexPair> window;
    try {
        window = hyperbolic_set(2 * t + 1, table.shape());
    } catch (const DoesNotFit&) {
        return std::nullopt;
    }
    if (t > table.shape().r1 / 2 || t > table.shape().r2 / 2) return std::nullopt;
    std::vector<IndexPair> border;
    if (t >= 2 && t <= 4) border = border_set(t);
    std::size_t holes = 0;
    for (const auto& n : window) {
        if (table.cells.known(tau + n)) continue;
        if (std::find(border.begin(), border.end(), n) == border.end()) return std::nullopt;
        ++holes;
    }
    return holes;
}

std::vector<Placement> windows_for_t(const IncompleteTable& table, int t, bool with_holes_only) {
    std::vector<std::pair<std::size_t, Placement>> ranked;
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) {
            auto h = window_holes(table, {i, j}, t);
            if (!h || (with_holes_only && *h == 0)) continue;
            ranked.push_back({*h, {{i, j}, t}});
        }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Placement> out;
    for (auto& [h, p] : ranked) out.push_back(p);
    return out;
}

}  // namespace

std::vector<Placement> candidate_placements(const IncompleteTable& table, bool punctured) {
    std::vector<Placement> out = detect_hyperbolic(table).candidates;
    if (!punctured) return out;
    const int t_max = std::min({4, table.shape().r1 / 2, table.shape().r2 / 2});
    for (int t = t_max; t >= 2; --t)
        for (const auto& p : windows_for_t(table, t, true))
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    return out;
}

namespace {

void fill_completed(ResolveResult& res, const IncompleteTable& table, const SearchContext& ctx, const Leaf& leaf) {
    const auto& field = *table.field;
    auto& rep = res.report;
    rep.status = Status::Completed;
    rep.tau = ctx.tau;
    rep.t = ctx.t;
    rep.order = to_string(ctx.order);
    for (const auto& f : leaf.state.F) rep.basis.push_back(f.str(ctx.order));
    for (const auto& n : leaf.state.footprint(ctx.order)) rep.footprint.push_back(n);
    SparseGenerator gen{*leaf.e_prime, descend_to_base(*leaf.e_prime, table.point)};
    for (const auto& [m, c] : gen.e_prime.terms()) {
        rep.support.push_back(m);
        rep.coefficients.push_back(field.format(c));
    }
    if (gen.descent) {
        DescentRecord d{gen.descent->tau, {}};
        for (const auto& [m, c] : gen.descent->e.terms()) d.coefficients.push_back(field.format(c));
        rep.descent = d;
    }
    auto done = complete_table(table, gen.e_prime, ctx.tau, table.point);
    for (int i = 0; i < table.shape().r1; ++i)
        for (int j = 0; j < table.shape().r2; ++j) rep.completed_table.push_back(field.format(*done.cells.at({i, j})));
    for (const auto& fill : leaf.fills)
        rep.inferred.push_back({table.shape().wrap(ctx.tau + fill.cell), field.format(fill.value), fill.how.str()});
    if (leaf.state.assumed_zero > 0)
        rep.warnings.push_back(std::to_string(leaf.state.assumed_zero) +
                               " discrepancies reading unknown cells outside the window were taken as zero");
    res.completed = std::move(done);
    res.generator = std::move(gen);
    res.state = leaf.state;
}

std::string summarize(const std::vector<Leaf>& leaves) {
    std::map<std::string, std::size_t> counts;
    for (const auto& l : leaves) ++counts[to_string(l.kind)];
    if (counts.size() == 1) return counts.begin()->first;
    std::string out;
    for (const auto& [k, n] : counts) out += (out.empty() ? "" : ",") + k + ":" + std::to_string(n);
    return out;
}

}  // namespace

ResolveResult resolve(const IncompleteTable& table, const ResolveConfig& config) {
    ResolveResult res;
    auto& rep = res.report;
    const auto& field = *table.field;
    const std::size_t budget = config.branch_budget
                                   ? config.branch_budget
                                   : static_cast<std::size_t>(field.order()) * static_cast<std::size_t>(field.order());

    std::vector<Placement> placements;
    if (config.tau && config.t) {
        placements.push_back({table.shape().wrap(*config.tau), *config.t});
    } else if (config.t) {
        placements = windows_for_t(table, *config.t, false);
    } else if (config.tau) {
        for (int t = std::min(table.shape().r1, table.shape().r2) / 2; t >= 1; --t)
            if (window_holes(table, *config.tau, t)) placements.push_back({table.shape().wrap(*config.tau), t});
    } else {
        placements = candidate_placements(table, config.punctured);
    }
    if (placements.empty()) {
        rep.status = Status::NotSyndrome;
        rep.warnings.push_back("not a hyperbolic table: no window tau + B(2t+1) is usable");
        return res;
    }
    if (std::any_of(placements.begin(), placements.end(), [](const Placement& p) { return p.t > 4; }))
        rep.warnings.push_back("t > 4 lies beyond the proven regime; results rest on the final verification");

    bool budget_hit = false;
    bool all_overflow = true;
    for (const auto& pl : placements) {
        std::vector<OrderKind> orders;
        if (config.order == OrderMode::Auto)
            orders = auto_orders(extract_working(table, pl.tau).cells, pl.t);
        else
            orders = {config.order == OrderMode::Lex ? OrderKind::Lex : OrderKind::Graded};

        for (auto order : orders) {
            AttemptRecord att{pl.tau, pl.t, to_string(order), "", 0};
            SearchContext ctx;
            std::vector<Leaf> leaves;
            try {
                ctx = make_context(table, pl.tau, pl.t, order, budget);
                ctx.check_invariants = config.check_invariants;
                leaves = explore(ctx, init_state(field), extract_working(table, pl.tau).cells, 0, {});
            } catch (const BudgetExceeded&) {
                att.outcome = "budget-exceeded";
                att.leaves = ctx.leaves;
                rep.branches_tried += ctx.leaves;
                rep.attempts.push_back(att);
                budget_hit = true;
                all_overflow = false;
                continue;
            } catch (const DoesNotFit& e) {
                att.outcome = "does-not-fit";
                rep.attempts.push_back(att);
                all_overflow = false;
                continue;
            }
            att.leaves = leaves.size();
            rep.branches_tried += leaves.size();

            std::vector<const Leaf*> verified;
            std::vector<std::vector<std::optional<Element>>> tables;
            for (const auto& leaf : leaves) {
                if (leaf.kind != LeafKind::Overflow) all_overflow = false;
                if (leaf.kind != LeafKind::Verified) continue;
                auto done = complete_table(table, *leaf.e_prime, ctx.tau, table.point);
                std::vector<std::optional<Element>> cells;
                for (int i = 0; i < table.shape().r1; ++i)
                    for (int j = 0; j < table.shape().r2; ++j) cells.push_back(done.cells.at({i, j}));
                if (std::find(tables.begin(), tables.end(), cells) != tables.end()) continue;
                tables.push_back(std::move(cells));
                verified.push_back(&leaf);
            }
            if (verified.empty()) {
                att.outcome = summarize(leaves);
                rep.attempts.push_back(att);
                continue;
            }
            if (verified.size() == 1) {
                att.outcome = "completed";
                rep.attempts.push_back(att);
                fill_completed(res, table, ctx, *verified.front());
                return res;
            }
            att.outcome = "ambiguous";
            rep.attempts.push_back(att);
            rep.status = Status::Ambiguous;
            rep.tau = ctx.tau;
            rep.t = ctx.t;
            rep.order = to_string(order);
            rep.warnings.push_back(std::to_string(verified.size()) + " distinct completions verify");
            for (const auto* leaf : verified) {
                std::string s;
                for (const auto& [m, c] : leaf->e_prime->terms()) s += (s.empty() ? "" : " ") + m.str() + "=" + field.format(c);
                rep.warnings.push_back("candidate: " + s);
            }
            return res;
        }
    }
    if (budget_hit)
        rep.status = Status::BranchBudgetExceeded;
    else if (all_overflow)
        rep.status = Status::FootprintOverflow;
    else
        rep.status = Status::NotSyndrome;
    return res;
}

}  // namespace hbms
