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

#include "hyperbms/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hbms {

CellGrid syndrome_table(const Polynomial& e, const IndexPair& tau, const EvaluationPoint& point) {
    CellGrid g(point.shape());
    for (int i = 0; i < point.shape().r1; ++i)
        for (int j = 0; j < point.shape().r2; ++j) g.set({i, j}, point.evaluate(e, tau + IndexPair{i, j}));
    return g;
}

Polynomial shift_generator(const Polynomial& e, const IndexPair& offset, const EvaluationPoint& point) {
    Polynomial out(e.field());
    for (const auto& [m, c] : e.terms()) out.set(m, c * point.monomial(offset, m));
    return out;
}

namespace {

std::vector<Element> coefficient_pool(const Field& field, bool base_field) {
    std::vector<Element> out;
    for (const auto& x : field.elements())
        if (!x.is_zero() && (!base_field || field.in_base_field(x))) out.push_back(x);
    return out;
}

void apply_holes(OracleInstance& inst, std::mt19937_64& rng, const InstanceOptions& opts) {
    const auto& shape = inst.shape();
    inst.table.cells = inst.full;
    std::set<IndexPair> window;
    for (const auto& n : hyperbolic_set(2 * opts.t + 1, shape)) window.insert(shape.wrap(inst.window + n));
    for (const auto& n : opts.puncture) inst.table.cells.set(inst.window + n, std::nullopt);

    std::vector<IndexPair> outside;
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j)
            if (!window.contains({i, j})) outside.push_back({i, j});
    if (opts.holes > outside.size()) throw Error("cannot place that many holes outside the window");
    std::shuffle(outside.begin(), outside.end(), rng);
    for (std::size_t k = 0; k < opts.holes; ++k) inst.table.cells.set(outside[k], std::nullopt);
}

}  // namespace

OracleInstance make_instance(std::shared_ptr<const Field> field, TableShape shape, Polynomial e, IndexPair tau,
                             IndexPair window, std::uint64_t seed, const InstanceOptions& opts) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    OracleInstance inst{field,  std::move(e), shape.wrap(tau), EvaluationPoint::standard(*field, shape),
                        CellGrid(shape), {},      shape.wrap(window), opts.t};
    inst.full = syndrome_table(inst.e, inst.tau, inst.point);
    inst.table.field = field;
    inst.table.point = inst.point;
    apply_holes(inst, rng, opts);
    return inst;
}

OracleInstance random_instance(std::shared_ptr<const Field> field, TableShape shape, std::uint64_t seed,
                               const InstanceOptions& opts) {
    if (opts.t < 1 || opts.t > shape.r1 / 2 || opts.t > shape.r2 / 2) throw Error("t does not fit the table");
    std::mt19937_64 rng(seed);
    const int weight = opts.weight ? *opts.weight : std::uniform_int_distribution<int>(1, opts.t)(rng);
    if (weight < 0 || weight > shape.size()) throw Error("bad weight");

    std::vector<IndexPair> cells;
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j) cells.push_back({i, j});
    std::shuffle(cells.begin(), cells.end(), rng);
    const auto pool = coefficient_pool(*field, opts.base_field);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Polynomial e(*field);
    for (int k = 0; k < weight; ++k) e.set(cells[static_cast<std::size_t>(k)], pool[pick(rng)]);

    std::uniform_int_distribution<int> d1(0, shape.r1 - 1), d2(0, shape.r2 - 1);
    const IndexPair tau{d1(rng), d2(rng)};
    const IndexPair window{d1(rng), d2(rng)};
    return make_instance(std::move(field), shape, std::move(e), tau, window, rng(), opts);
}

void check_instance(const OracleInstance& inst, const ResolveConfig& config, SweepSummary& summary) {
    ++summary.instances;
    const auto res = resolve(inst.table, config);
    if (res.report.status != Status::Completed) {
        ++summary.rejected;
        return;
    }
    ++summary.completed;
    const auto& gen = *res.generator;
    const auto expected = inst.e_prime(*res.report.tau);
    if (gen.support() == SparseGenerator{expected, std::nullopt}.support()) ++summary.support_ok;
    if (res.completed->cells == inst.full) ++summary.table_ok;
    const auto delta = res.state.footprint(parse_order(*res.report.order));
    const auto D = defining_set(res.state.F, inst.point);
    if (delta.size() == inst.e.size() && D.size() == delta.size()) ++summary.footprint_ok;
}

SweepSummary exhaustive_sweep(std::shared_ptr<const Field> field, TableShape shape, int weight,
                              const std::vector<Element>& coefficients, int t) {
    SweepSummary summary;
    std::vector<IndexPair> cells;
    for (int i = 0; i < shape.r1; ++i)
        for (int j = 0; j < shape.r2; ++j) cells.push_back({i, j});
    const std::size_t w = static_cast<std::size_t>(weight);
    ResolveConfig config;
    config.t = t;

    // Supports as increasing index tuples, coefficients as mixed-radix counters.
    std::vector<std::size_t> supp(w);
    for (std::size_t k = 0; k < w; ++k) supp[k] = k;
    InstanceOptions opts;
    opts.t = t;
    while (true) {
        std::vector<std::size_t> coef(w, 0);
        while (true) {
            Polynomial e(*field);
            for (std::size_t k = 0; k < w; ++k) e.set(cells[supp[k]], coefficients[coef[k]]);
            for (const auto& tau : cells) check_instance(make_instance(field, shape, e, tau, {0, 0}, 0, opts), config, summary);
            std::size_t pos = 0;
            while (pos < w && ++coef[pos] == coefficients.size()) coef[pos++] = 0;
            if (pos == w) break;
        }
        std::size_t k = w;
        while (k > 0 && supp[k - 1] == cells.size() - w + k - 1) --k;
        if (k == 0) break;
        ++supp[k - 1];
        for (std::size_t i = k; i < w; ++i) supp[i] = supp[i - 1] + 1;
    }
    return summary;
}

}  // namespace hbms
