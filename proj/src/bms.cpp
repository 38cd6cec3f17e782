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

#include "hyperbms/bms.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "hyperbms/groebner.hpp"
#include "hyperbms/recurrence.hpp"

namespace hbms {

std::vector<IndexPair> BmsState::defining_points(OrderKind order) const {
    std::vector<IndexPair> out;
    out.reserve(F.size());
    for (const auto& f : F) out.push_back(f.leading_power(order));
    return out;
}

Footprint BmsState::footprint(OrderKind order) const {
    const auto pts = defining_points(order);
    return footprint_of(pts);
}

BmsState init_state(const Field& field) {
    BmsState s;
    s.F.push_back(Polynomial::constant(field, field.one()));
    return s;
}

Footprint footprint_of(std::span<const IndexPair> defining_points) {
    Footprint delta;
    for (const auto& c : corners_of(defining_points))
        for (const auto& n : box(c)) delta.insert(n);
    return delta;
}

std::vector<IndexPair> corners_of(std::span<const IndexPair> defining_points) {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i + 1 < defining_points.size(); ++i)
        out.push_back({defining_points[i].n1 - 1, defining_points[i + 1].n2 - 1});
    return out;
}

std::vector<IndexPair> defining_points_of(const Footprint& delta) {
    int max1 = -1;
    for (const auto& n : delta) max1 = std::max(max1, n.n1);
    std::vector<int> height(static_cast<std::size_t>(max1 + 2), 0);
    for (const auto& n : delta) {
        auto& h = height[static_cast<std::size_t>(n.n1)];
        h = std::max(h, n.n2 + 1);
    }
    std::vector<IndexPair> out;
    for (int i = 0; i <= max1 + 1; ++i) {
        const int h = height[static_cast<std::size_t>(i)];
        if (i == 0 || h < height[static_cast<std::size_t>(i - 1)]) out.push_back({i, h});
    }
    std::reverse(out.begin(), out.end());
    return out;
}

namespace {

[[noreturn]] void broken(const std::string& what, const IndexPair& l) {
    throw std::logic_error("BMS invariant violated at " + l.str() + ": " + what);
}

void check_state(const BmsState& s, const IndexPair& l, const CellGrid& u, OrderKind order) {
    const auto pts = s.defining_points(order);
    if (pts.empty() || pts.front().n2 != 0 || pts.back().n1 != 0) broken("staircase ends", l);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].n1 > pts[i + 1].n1 && pts[i].n2 < pts[i + 1].n2)) broken("staircase order", l);
    const auto corners = corners_of(pts);
    if (corners.size() != s.G.size()) broken("auxiliary count", l);
    for (std::size_t i = 0; i < corners.size(); ++i) {
        const auto& a = s.G[i];
        if (a.v.is_zero()) broken("zero auxiliary discrepancy", l);
        if (a.span(order) != corners[i]) broken("auxiliary span", l);
        if (auto v = try_recurrence_value(a.g, u, a.k, order); v && *v != a.v) broken("auxiliary value", l);
    }
    for (const auto& f : s.F) {
        if (!precedes(f.leading_power(order), l)) continue;
        if (auto v = try_recurrence_value(f, u, l, order); v && !v->is_zero()) broken("nonzero discrepancy", l);
    }
}

}  // namespace

StepResult step(BmsState& state, const IndexPair& l, const CellGrid& u, OrderKind order, const StepOptions& opts) {
    StepResult res;
    res.at = l;
    const Footprint delta = state.footprint(order);
    res.footprint_size = delta.size();
    if (!u.known(l)) {
        res.status = StepStatus::HoleEncountered;
        res.cell = u.shape().wrap(l);
        return res;
    }

    const auto pts = state.defining_points(order);
    const std::size_t d = state.F.size();
    std::vector<Element> disc(d, state.F.front().field().zero());
    std::size_t assumed = 0;
    for (std::size_t i = 0; i < d; ++i) {
        if (!precedes(pts[i], l)) continue;
        IndexPair missing;
        auto v = try_recurrence_value(state.F[i], u, l, order, &missing);
        if (v) {
            disc[i] = *v;
            continue;
        }
        // A failure here would push |Delta| past t, which no weight <= t table allows.
        Footprint grown = delta;
        for (const auto& n : box(l - pts[i])) grown.insert(n);
        if (opts.t > 0 && grown.size() > static_cast<std::size_t>(opts.t)) {
            ++assumed;
            continue;
        }
        res.status = StepStatus::HoleEncountered;
        res.cell = missing;
        return res;
    }

    std::vector<std::size_t> failing;
    for (std::size_t i = 0; i < d; ++i)
        if (!disc[i].is_zero()) failing.push_back(i);
    if (failing.empty()) {
        state.assumed_zero += assumed;
        return res;
    }

    Footprint grown = delta;
    for (auto i : failing)
        for (const auto& n : box(l - pts[i])) grown.insert(n);
    res.footprint_size = grown.size();
    if (opts.t > 0 && grown.size() > static_cast<std::size_t>(opts.t)) {
        res.status = StepStatus::FootprintOverflow;
        return res;
    }

    auto is_failing = [&](std::size_t i) { return !disc[i].is_zero(); };
    auto best_aux = [&](auto&& eligible) -> const AuxEntry* {
        const AuxEntry* best = nullptr;
        for (const auto& a : state.G)
            if (eligible(a) && (!best || less_total(best->k, a.k, order))) best = &a;
        return best;
    };

    const auto new_pts = defining_points_of(grown);
    std::vector<Polynomial> new_F;
    for (const auto& sp : new_pts) {
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < d; ++i) {
            if (!precedes(pts[i], sp)) continue;
            if (!pick) {
                pick = i;
                continue;
            }
            const auto rank = [&](std::size_t j) { return std::pair{is_failing(j) ? 1 : 0, pts[j] == sp ? 0 : 1}; };
            if (rank(i) < rank(*pick)) pick = i;
        }
        if (!pick) broken("no predecessor for defining point " + sp.str(), l);
        const std::size_t j = *pick;
        Polynomial f = state.F[j].shifted(sp - pts[j]);
        if (is_failing(j) && precedes(sp, l)) {
            const IndexPair need = l - sp;
            const AuxEntry* g =
                best_aux([&](const AuxEntry& a) { return precedes(need, a.span(order)); });
            if (!g) broken("no auxiliary entry covers " + need.str(), l);
            const IndexPair shift = sp - l + g->span(order);
            f = f - g->g.shifted(shift) * (disc[j] / g->v);
        }
        new_F.push_back(std::move(f));
    }

    std::vector<AuxEntry> new_G;
    for (const auto& c : corners_of(new_pts)) {
        if (delta.contains(c)) {
            const AuxEntry* g = best_aux([&](const AuxEntry& a) { return precedes(c, a.span(order)); });
            if (!g) broken("no auxiliary entry for corner " + c.str(), l);
            new_G.push_back({g->g.shifted(g->span(order) - c), g->k, g->v});
            continue;
        }
        std::optional<std::size_t> src;
        for (auto i : failing)
            if (precedes(c, l - pts[i])) {
                src = i;
                break;
            }
        if (!src) broken("no failing polynomial for corner " + c.str(), l);
        new_G.push_back({state.F[*src].shifted(l - pts[*src] - c), l, disc[*src]});
    }

    BmsState next{std::move(new_F), std::move(new_G), state.assumed_zero + assumed};
    if (opts.check_invariants) check_state(next, l, u, order);
    state = std::move(next);
    res.updated = true;
    return res;
}

std::string to_string(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::Basis: return "Basis";
        case OutcomeKind::FootprintOverflow: return "FootprintOverflow";
        case OutcomeKind::HoleEncountered: return "HoleEncountered";
        case OutcomeKind::NotClosed: return "NotClosed";
    }
    return "?";
}

BmsOutcome run_points(BmsState state, std::span<const IndexPair> points, std::size_t begin, const CellGrid& u,
                      OrderKind order, const TableShape& shape, const RunOptions& opts) {
    BmsOutcome out;
    const StepOptions sopts{opts.t, opts.check_invariants};
    for (std::size_t i = begin; i < points.size(); ++i) {
        const auto r = step(state, points[i], u, order, sopts);
        if (r.status == StepStatus::Ok) continue;
        out.kind = r.status == StepStatus::FootprintOverflow ? OutcomeKind::FootprintOverflow
                                                             : OutcomeKind::HoleEncountered;
        out.state = std::move(state);
        out.index = i;
        out.at = r.at;
        out.cell = r.cell;
        out.footprint_size = r.footprint_size;
        return out;
    }
    out.index = points.size();
    out.footprint_size = state.footprint(order).size();
    if (opts.closure && !closure_check(state.F, shape, order)) out.kind = OutcomeKind::NotClosed;
    out.state = std::move(state);
    return out;
}

BmsOutcome run(const Field& field, const CellGrid& u, int t, OrderKind order, bool closure) {
    const auto points = sorted_iteration(hyperbolic_set(2 * t + 1, u.shape()), order);
    return run_points(init_state(field), points, 0, u, order, u.shape(), {t, true, closure});
}

BmsOutcome run_full(const Field& field, const CellGrid& u, int t, OrderKind order) {
    const auto points = full_iteration(u.shape(), order);
    return run_points(init_state(field), points, 0, u, order, u.shape(), {t, true, false});
}

bool closure_check(std::span<const Polynomial> F, const TableShape& shape, OrderKind order) {
    std::vector<Polynomial> basis(F.begin(), F.end());
    const auto& field = F.front().field();
    basis.push_back(Polynomial::binomial_minus_one(field, {shape.r1, 0}));
    basis.push_back(Polynomial::binomial_minus_one(field, {0, shape.r2}));
    return buchberger_reduces(basis, order);
}

bool minimality_audit(const Footprint& delta, const CellGrid& u, const IndexPair& l, OrderKind order,
                      std::span<const IndexPair> prefix_points, int max_degree) {
    if (delta.empty()) return true;
    std::vector<IndexPair> prefix;
    for (const auto& k : prefix_points)
        if (less_total(k, l, order)) prefix.push_back(k);
    const Field* field = nullptr;
    for (int i = 0; i < u.shape().r1 && !field; ++i)
        for (int j = 0; j < u.shape().r2 && !field; ++j)
            if (u.known({i, j})) field = u.at({i, j})->field();
    if (!field) return true;
    const auto elems = field->elements();

    for (const auto& sigma : delta) {
        std::vector<IndexPair> lower;
        for (int i = 0; i <= max_degree; ++i)
            for (int j = 0; j <= max_degree; ++j)
                if (less_total({i, j}, sigma, order)) lower.push_back({i, j});
        double combos = 1;
        for (std::size_t i = 0; i < lower.size(); ++i) combos *= static_cast<double>(elems.size());
        if (combos > 1e7) throw Error("minimality audit search space too large");

        std::vector<std::size_t> idx(lower.size(), 0);
        while (true) {
            Polynomial g = Polynomial::monomial(*field, sigma, field->one());
            for (std::size_t i = 0; i < lower.size(); ++i) g.set(lower[i], elems[idx[i]]);
            bool generates = true;
            for (const auto& k : prefix) {
                if (!precedes(sigma, k)) continue;
                auto v = try_recurrence_value(g, u, k, order);
                if (!v || !v->is_zero()) {
                    generates = false;
                    break;
                }
            }
            if (generates) return false;
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == elems.size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
    }
    return true;
}

}  // namespace hbms
